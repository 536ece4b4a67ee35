#include "fishfresh/classify/mlp.hpp"

#include <algorithm>
#include <cmath>

#include "fishfresh/errors.hpp"
#include "fishfresh/rng.hpp"

namespace fishfresh {

namespace {

// Uniform in [-limit, limit) from raw engine draws; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform_pm(std::mt19937& rng, double limit) {
    const double u = static_cast<double>(rng()) / 4294967296.0;  // [0,1)
    return (2.0 * u - 1.0) * limit;
}

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

struct Gradients {
    std::vector<double> w1, b1, w2, b2;
};

// Forward + backward over the given row subset; loss includes the L2 term
// scaled by the subset size (the optimizer's view of one batch).
double batch_loss_grad(const MlpModel& m, const DataMatrix& x, const std::vector<int>& y,
                       const std::vector<size_t>& rows, Gradients& g) {
    const size_t d = m.n_features;
    const int h = m.params.hidden;
    const int k = m.n_classes;
    const size_t nb = rows.size();
    const double inv_n = 1.0 / static_cast<double>(nb);

    g.w1.assign(m.w1.size(), 0.0);
    g.b1.assign(m.b1.size(), 0.0);
    g.w2.assign(m.w2.size(), 0.0);
    g.b2.assign(m.b2.size(), 0.0);

    double loss = 0.0;
    std::vector<double> a1(h), probs(k), dz1(h);
    for (size_t ri = 0; ri < nb; ++ri) {
        const auto row = x.row(rows[ri]);
        const int target = y[rows[ri]];
        for (int j = 0; j < h; ++j) {
            double acc = m.b1[j];
            for (size_t f = 0; f < d; ++f) acc += m.w1[f * h + j] * row[f];
            a1[j] = std::tanh(acc);
        }
        for (int c = 0; c < k; ++c) {
            double acc = m.b2[c];
            for (int j = 0; j < h; ++j) acc += m.w2[static_cast<size_t>(j) * k + c] * a1[j];
            probs[c] = acc;
        }
        softmax_row(probs);
        loss -= std::log(std::max(probs[target], 1e-300)) * inv_n;

        // dL/dz2 = probs - onehot
        for (int j = 0; j < h; ++j) dz1[j] = 0.0;
        for (int c = 0; c < k; ++c) {
            const double dz2 = (probs[c] - (c == target ? 1.0 : 0.0)) * inv_n;
            g.b2[c] += dz2;
            for (int j = 0; j < h; ++j) {
                g.w2[static_cast<size_t>(j) * k + c] += dz2 * a1[j];
                dz1[j] += dz2 * m.w2[static_cast<size_t>(j) * k + c];
            }
        }
        for (int j = 0; j < h; ++j) {
            const double dzh = dz1[j] * (1.0 - a1[j] * a1[j]);  // tanh'
            g.b1[j] += dzh;
            for (size_t f = 0; f < d; ++f) g.w1[f * h + j] += dzh * row[f];
        }
    }

    const double reg = m.params.alpha * inv_n;
    for (size_t i = 0; i < m.w1.size(); ++i) {
        loss += 0.5 * reg * m.w1[i] * m.w1[i];
        g.w1[i] += reg * m.w1[i];
    }
    for (size_t i = 0; i < m.w2.size(); ++i) {
        loss += 0.5 * reg * m.w2[i] * m.w2[i];
        g.w2[i] += reg * m.w2[i];
    }
    return loss;
}

struct AdamState {
    std::vector<double> m, v;
    explicit AdamState(size_t n) : m(n, 0.0), v(n, 0.0) {}
};

void adam_update(std::vector<double>& param, const std::vector<double>& grad, AdamState& st,
                 const MlpParams& p, long t) {
    const double bc1 = 1.0 - std::pow(p.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(p.beta2, static_cast<double>(t));
    for (size_t i = 0; i < param.size(); ++i) {
        st.m[i] = p.beta1 * st.m[i] + (1.0 - p.beta1) * grad[i];
        st.v[i] = p.beta2 * st.v[i] + (1.0 - p.beta2) * grad[i] * grad[i];
        param[i] -= p.learning_rate * (st.m[i] / bc1) / (std::sqrt(st.v[i] / bc2) + p.adam_eps);
    }
}

}  // namespace

MlpModel init_mlp(const MlpParams& params, size_t n_features, int n_classes, unsigned seed) {
    MlpModel m;
    m.params = params;
    m.n_features = n_features;
    m.n_classes = n_classes;
    m.w1.resize(n_features * params.hidden);
    m.b1.assign(params.hidden, 0.0);
    m.w2.resize(static_cast<size_t>(params.hidden) * n_classes);
    m.b2.assign(n_classes, 0.0);

    std::mt19937 rng = seeded_rng(seed, 0xA11CEu);
    const double lim1 = std::sqrt(6.0 / static_cast<double>(n_features + params.hidden));
    for (double& w : m.w1) w = uniform_pm(rng, lim1);
    const double lim2 = std::sqrt(6.0 / static_cast<double>(params.hidden + n_classes));
    for (double& w : m.w2) w = uniform_pm(rng, lim2);
    return m;
}

MlpModel train_mlp(const MlpParams& params, const DataMatrix& x, const std::vector<int>& y,
                   int n_classes, unsigned seed) {
    if (x.rows == 0 || x.rows != y.size()) throw ArgumentError("train_mlp: bad training shape");

    MlpModel m = init_mlp(params, x.cols, n_classes, seed);
    AdamState s_w1(m.w1.size()), s_b1(m.b1.size()), s_w2(m.w2.size()), s_b2(m.b2.size());
    Gradients g;
    std::mt19937 shuffle_rng = seeded_rng(seed, 0x5EEDu);

    std::vector<size_t> order(x.rows);
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;

    long t = 0;
    const size_t batch = std::max<size_t>(1, static_cast<size_t>(params.batch_size));
    for (int epoch = 0; epoch < params.max_epochs; ++epoch) {
        deterministic_shuffle(order, shuffle_rng);
        for (size_t start = 0; start < order.size(); start += batch) {
            const size_t end = std::min(start + batch, order.size());
            std::vector<size_t> rows(order.begin() + start, order.begin() + end);
            batch_loss_grad(m, x, y, rows, g);
            ++t;
            adam_update(m.w1, g.w1, s_w1, params, t);
            adam_update(m.b1, g.b1, s_b1, params, t);
            adam_update(m.w2, g.w2, s_w2, params, t);
            adam_update(m.b2, g.b2, s_b2, params, t);
        }
    }
    return m;
}

DataMatrix predict_proba_mlp(const MlpModel& m, const DataMatrix& x) {
    if (x.cols != m.n_features) throw ArgumentError("predict_mlp: feature count mismatch");
    const int h = m.params.hidden;
    const int k = m.n_classes;
    DataMatrix proba(x.rows, k);
    #pragma omp parallel for
    for (size_t i = 0; i < x.rows; ++i) {
        const auto row = x.row(i);
        std::vector<double> a1(h);
        for (int j = 0; j < h; ++j) {
            double acc = m.b1[j];
            for (size_t f = 0; f < m.n_features; ++f) acc += m.w1[f * h + j] * row[f];
            a1[j] = std::tanh(acc);
        }
        auto out = proba.row(i);
        for (int c = 0; c < k; ++c) {
            double acc = m.b2[c];
            for (int j = 0; j < h; ++j) acc += m.w2[static_cast<size_t>(j) * k + c] * a1[j];
            out[c] = acc;
        }
        softmax_row(out);
    }
    return proba;
}

std::vector<int> predict_mlp(const MlpModel& m, const DataMatrix& x) {
    const DataMatrix proba = predict_proba_mlp(m, x);
    std::vector<int> out(x.rows);
    for (size_t i = 0; i < x.rows; ++i) {
        const auto row = proba.row(i);
        int best = 0;
        for (int c = 1; c < m.n_classes; ++c)
            if (row[c] > row[best]) best = c;
        out[i] = best;
    }
    return out;
}

MlpLossGrad mlp_loss_and_gradient(const MlpModel& model, const DataMatrix& x,
                                  const std::vector<int>& y) {
    std::vector<size_t> rows(x.rows);
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    Gradients g;
    MlpLossGrad out;
    out.loss = batch_loss_grad(model, x, y, rows, g);
    out.grad.reserve(g.w1.size() + g.b1.size() + g.w2.size() + g.b2.size());
    out.grad.insert(out.grad.end(), g.w1.begin(), g.w1.end());
    out.grad.insert(out.grad.end(), g.b1.begin(), g.b1.end());
    out.grad.insert(out.grad.end(), g.w2.begin(), g.w2.end());
    out.grad.insert(out.grad.end(), g.b2.begin(), g.b2.end());
    return out;
}

std::vector<double> mlp_flatten(const MlpModel& m) {
    std::vector<double> flat;
    flat.reserve(m.w1.size() + m.b1.size() + m.w2.size() + m.b2.size());
    flat.insert(flat.end(), m.w1.begin(), m.w1.end());
    flat.insert(flat.end(), m.b1.begin(), m.b1.end());
    flat.insert(flat.end(), m.w2.begin(), m.w2.end());
    flat.insert(flat.end(), m.b2.begin(), m.b2.end());
    return flat;
}

void mlp_unflatten(MlpModel& m, const std::vector<double>& flat) {
    if (flat.size() != m.w1.size() + m.b1.size() + m.w2.size() + m.b2.size())
        throw ArgumentError("mlp_unflatten: size mismatch");
    size_t o = 0;
    std::copy(flat.begin() + o, flat.begin() + o + m.w1.size(), m.w1.begin());
    o += m.w1.size();
    std::copy(flat.begin() + o, flat.begin() + o + m.b1.size(), m.b1.begin());
    o += m.b1.size();
    std::copy(flat.begin() + o, flat.begin() + o + m.w2.size(), m.w2.begin());
    o += m.w2.size();
    std::copy(flat.begin() + o, flat.begin() + o + m.b2.size(), m.b2.begin());
}

}  // namespace fishfresh
