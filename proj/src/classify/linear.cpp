#include "fishfresh/classify/linear.hpp"

#include <algorithm>
#include <cmath>

#include "fishfresh/errors.hpp"

namespace fishfresh {

namespace {

// Softmax one row in place, max-shifted.
void softmax_row(std::span<double> z) {
    double mx = z[0];
    for (double v : z) mx = std::max(mx, v);
    double sum = 0.0;
    for (double& v : z) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : z) v /= sum;
}

}  // namespace

LossGrad logistic_loss_and_gradient(const std::vector<double>& params_flat, const DataMatrix& x,
                                    const std::vector<int>& y, int n_classes, double C) {
    const size_t d = x.cols;
    const size_t n = x.rows;
    const size_t wsize = static_cast<size_t>(n_classes) * d;
    if (params_flat.size() != wsize + n_classes)
        throw ArgumentError("logistic_loss_and_gradient: parameter vector size mismatch");
    const double* w = params_flat.data();          // n_classes x d
    const double* b = params_flat.data() + wsize;  // n_classes

    LossGrad out;
    out.grad.assign(params_flat.size(), 0.0);
    std::vector<double> logits(n_classes);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        const auto row = x.row(i);
        for (int c = 0; c < n_classes; ++c) {
            double acc = b[c];
            const double* wc = w + static_cast<size_t>(c) * d;
            for (size_t j = 0; j < d; ++j) acc += wc[j] * row[j];
            logits[c] = acc;
        }
        softmax_row(logits);
        out.loss -= std::log(std::max(logits[y[i]], 1e-300)) * inv_n;
        for (int c = 0; c < n_classes; ++c) {
            const double delta = (logits[c] - (y[i] == c ? 1.0 : 0.0)) * inv_n;
            double* gc = out.grad.data() + static_cast<size_t>(c) * d;
            for (size_t j = 0; j < d; ++j) gc[j] += delta * row[j];
            out.grad[wsize + c] += delta;
        }
    }
    // L2 penalty on weights only, scaled like the mean data term.
    const double reg = 1.0 / (C * static_cast<double>(n));
    for (size_t j = 0; j < wsize; ++j) {
        out.loss += 0.5 * reg * w[j] * w[j];
        out.grad[j] += reg * w[j];
    }
    return out;
}

LogisticModel train_logistic(const LogisticParams& params, const DataMatrix& x,
                             const std::vector<int>& y, int n_classes) {
    if (x.rows == 0 || x.rows != y.size())
        throw ArgumentError("train_logistic: bad training shape");

    const size_t d = x.cols;
    const size_t wsize = static_cast<size_t>(n_classes) * d;
    std::vector<double> theta(wsize + n_classes, 0.0);

    LossGrad cur = logistic_loss_and_gradient(theta, x, y, n_classes, params.C);
    double step = 1.0;
    for (int iter = 0; iter < params.max_iter; ++iter) {
        double gnorm_inf = 0.0;
        double gnorm_sq = 0.0;
        for (double g : cur.grad) {
            gnorm_inf = std::max(gnorm_inf, std::abs(g));
            gnorm_sq += g * g;
        }
        if (gnorm_inf < params.tol) break;

        // Backtracking line search on the descent direction -grad.
        bool accepted = false;
        std::vector<double> trial(theta.size());
        while (step > 1e-14) {
            for (size_t j = 0; j < theta.size(); ++j) trial[j] = theta[j] - step * cur.grad[j];
            LossGrad next = logistic_loss_and_gradient(trial, x, y, n_classes, params.C);
            if (next.loss <= cur.loss - 1e-4 * step * gnorm_sq) {
                theta.swap(trial);
                cur = std::move(next);
                step = std::min(step * 2.0, 1e6);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }

    LogisticModel model;
    model.params = params;
    model.n_features = d;
    model.n_classes = n_classes;
    model.weights.assign(theta.begin(), theta.begin() + wsize);
    model.bias.assign(theta.begin() + wsize, theta.end());
    return model;
}

DataMatrix predict_proba_logistic(const LogisticModel& model, const DataMatrix& x) {
    if (x.cols != model.n_features)
        throw ArgumentError("predict_logistic: feature count mismatch");
    DataMatrix proba(x.rows, model.n_classes);
    #pragma omp parallel for
    for (size_t i = 0; i < x.rows; ++i) {
        const auto row = x.row(i);
        auto out = proba.row(i);
        for (int c = 0; c < model.n_classes; ++c) {
            double acc = model.bias[c];
            const double* wc = model.weights.data() + static_cast<size_t>(c) * model.n_features;
            for (size_t j = 0; j < model.n_features; ++j) acc += wc[j] * row[j];
            out[c] = acc;
        }
        softmax_row(out);
    }
    return proba;
}

std::vector<int> predict_logistic(const LogisticModel& model, const DataMatrix& x) {
    const DataMatrix proba = predict_proba_logistic(model, x);
    std::vector<int> out(x.rows);
    for (size_t i = 0; i < x.rows; ++i) {
        const auto row = proba.row(i);
        int best = 0;
        for (int c = 1; c < model.n_classes; ++c)
            if (row[c] > row[best]) best = c;
        out[i] = best;
    }
    return out;
}

}  // namespace fishfresh
