#include "fishfresh/classify/knn.hpp"

#include <algorithm>
#include <cmath>

#include "fishfresh/errors.hpp"

namespace fishfresh {

KnnModel train_knn(const KnnParams& params, const DataMatrix& x, const std::vector<int>& y,
                   int n_classes) {
    if (x.rows == 0 || x.rows != y.size())
        throw ArgumentError("train_knn: bad training shape");
    KnnModel model;
    model.params = params;
    model.n_classes = n_classes;
    model.train_x = x;
    model.train_y = y;
    return model;
}

namespace {

double minkowski_distance(std::span<const double> a, std::span<const double> b, int p) {
    double acc = 0.0;
    if (p == 2) {
        for (size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    for (size_t i = 0; i < a.size(); ++i) acc += std::pow(std::abs(a[i] - b[i]), p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace

std::vector<int> predict_knn(const KnnModel& model, const DataMatrix& x) {
    if (x.cols != model.train_x.cols)
        throw ArgumentError("predict_knn: feature count mismatch");
    const size_t n_train = model.train_x.rows;
    const size_t k = std::min<size_t>(std::max(model.params.k, 1), n_train);

    std::vector<int> out(x.rows);
    #pragma omp parallel for schedule(dynamic)
    for (size_t r = 0; r < x.rows; ++r) {
        std::vector<std::pair<double, size_t>> dist(n_train);
        for (size_t t = 0; t < n_train; ++t)
            dist[t] = {minkowski_distance(x.row(r), model.train_x.row(t), model.params.minkowski_p),
                       t};
        // Distance ties break on training index so neighbour selection is
        // deterministic.
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

        std::vector<double> votes(model.n_classes, 0.0);
        bool exact = false;
        for (size_t i = 0; i < k; ++i)
            if (dist[i].first == 0.0) exact = true;
        for (size_t i = 0; i < k; ++i) {
            const int cls = model.train_y[dist[i].second];
            if (model.params.distance_weighted) {
                if (exact) {
                    if (dist[i].first == 0.0) votes[cls] += 1.0;
                } else {
                    votes[cls] += 1.0 / dist[i].first;
                }
            } else {
                votes[cls] += 1.0;
            }
        }
        int best = 0;
        for (int c = 1; c < model.n_classes; ++c)
            if (votes[c] > votes[best]) best = c;
        out[r] = best;
    }
    return out;
}

}  // namespace fishfresh
