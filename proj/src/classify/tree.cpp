#include "fishfresh/classify/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fishfresh/errors.hpp"

namespace fishfresh {

namespace {

double impurity(const std::vector<long>& counts, long total, SplitCriterion criterion) {
    if (total == 0) return 0.0;
    double acc = 0.0;
    if (criterion == SplitCriterion::Gini) {
        for (long c : counts) {
            const double p = static_cast<double>(c) / static_cast<double>(total);
            acc += p * p;
        }
        return 1.0 - acc;
    }
    for (long c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        acc -= p * std::log2(p);
    }
    return acc;
}

int majority_class(const std::vector<long>& counts) {
    int best = 0;
    for (int c = 1; c < static_cast<int>(counts.size()); ++c)
        if (counts[c] > counts[best]) best = c;  // ties keep the lowest index
    return best;
}

struct Builder {
    const TreeParams& params;
    const DataMatrix& x;
    const std::vector<int>& y;
    int n_classes;
    std::mt19937& rng;
    DecisionTree tree;
    int max_features = 1;

    struct BestSplit {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double score = 0.0;  // weighted child impurity, lower is better
    };

    std::vector<long> count_classes(const std::vector<size_t>& samples) const {
        std::vector<long> counts(n_classes, 0);
        for (size_t i : samples) ++counts[y[i]];
        return counts;
    }

    std::vector<int> sample_features() {
        std::vector<int> feats(x.cols);
        std::iota(feats.begin(), feats.end(), 0);
        // Partial Fisher-Yates: the first max_features entries become the
        // candidate set.
        for (int i = 0; i < max_features; ++i) {
            const size_t j = i + rng() % (feats.size() - i);
            std::swap(feats[i], feats[j]);
        }
        feats.resize(max_features);
        return feats;
    }

    BestSplit best_threshold_split(const std::vector<size_t>& samples,
                                   const std::vector<int>& feats) const {
        BestSplit best;
        const long n = static_cast<long>(samples.size());
        std::vector<std::pair<double, int>> vals(samples.size());
        for (int f : feats) {
            for (size_t i = 0; i < samples.size(); ++i)
                vals[i] = {x.at(samples[i], f), y[samples[i]]};
            std::sort(vals.begin(), vals.end());
            if (vals.front().first == vals.back().first) continue;

            std::vector<long> left(n_classes, 0);
            std::vector<long> right = count_classes(samples);
            for (size_t i = 0; i + 1 < vals.size(); ++i) {
                ++left[vals[i].second];
                --right[vals[i].second];
                if (vals[i].first == vals[i + 1].first) continue;
                const long nl = static_cast<long>(i) + 1;
                const long nr = n - nl;
                if (nl < params.min_samples_leaf || nr < params.min_samples_leaf) continue;
                const double score =
                    (nl * impurity(left, nl, params.criterion) +
                     nr * impurity(right, nr, params.criterion)) /
                    static_cast<double>(n);
                if (!best.found || score < best.score) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = 0.5 * (vals[i].first + vals[i + 1].first);
                    best.score = score;
                }
            }
        }
        return best;
    }

    BestSplit random_threshold_split(const std::vector<size_t>& samples,
                                     const std::vector<int>& feats) {
        BestSplit best;
        const long n = static_cast<long>(samples.size());
        for (int f : feats) {
            double lo = x.at(samples[0], f), hi = lo;
            for (size_t i : samples) {
                lo = std::min(lo, x.at(i, f));
                hi = std::max(hi, x.at(i, f));
            }
            if (lo == hi) continue;
            const double u = (static_cast<double>(rng()) + 0.5) / 4294967296.0;  // (0,1)
            const double threshold = lo + (hi - lo) * u;

            std::vector<long> left(n_classes, 0), right(n_classes, 0);
            long nl = 0;
            for (size_t i : samples) {
                if (x.at(i, f) <= threshold) {
                    ++left[y[i]];
                    ++nl;
                } else {
                    ++right[y[i]];
                }
            }
            const long nr = n - nl;
            if (nl < params.min_samples_leaf || nr < params.min_samples_leaf) continue;
            const double score = (nl * impurity(left, nl, params.criterion) +
                                  nr * impurity(right, nr, params.criterion)) /
                                 static_cast<double>(n);
            if (!best.found || score < best.score) {
                best.found = true;
                best.feature = f;
                best.threshold = threshold;
                best.score = score;
            }
        }
        return best;
    }

    int grow(std::vector<size_t>&& samples, int depth) {
        const std::vector<long> counts = count_classes(samples);
        const long n = static_cast<long>(samples.size());

        const bool pure = impurity(counts, n, params.criterion) == 0.0;
        if (pure || depth >= params.max_depth ||
            n < static_cast<long>(params.min_samples_split)) {
            tree.nodes.push_back({-1, 0.0, -1, -1, majority_class(counts)});
            return static_cast<int>(tree.nodes.size()) - 1;
        }

        const std::vector<int> feats = sample_features();
        const BestSplit split = params.strategy == SplitStrategy::BestThreshold
                                    ? best_threshold_split(samples, feats)
                                    : random_threshold_split(samples, feats);
        if (!split.found) {
            tree.nodes.push_back({-1, 0.0, -1, -1, majority_class(counts)});
            return static_cast<int>(tree.nodes.size()) - 1;
        }

        std::vector<size_t> left_samples, right_samples;
        left_samples.reserve(samples.size());
        right_samples.reserve(samples.size());
        for (size_t i : samples) {
            if (x.at(i, split.feature) <= split.threshold)
                left_samples.push_back(i);
            else
                right_samples.push_back(i);
        }
        samples.clear();
        samples.shrink_to_fit();

        const int node_index = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({split.feature, split.threshold, -1, -1, 0});
        const int left = grow(std::move(left_samples), depth + 1);
        const int right = grow(std::move(right_samples), depth + 1);
        tree.nodes[node_index].left = left;
        tree.nodes[node_index].right = right;
        return node_index;
    }
};

}  // namespace

DecisionTree build_tree(const TreeParams& params, const DataMatrix& x, const std::vector<int>& y,
                        int n_classes, const std::vector<size_t>& sample_indices,
                        std::mt19937& rng) {
    if (sample_indices.empty()) throw ArgumentError("build_tree: no samples");
    Builder b{params, x, y, n_classes, rng, {}, 1};
    b.max_features = params.max_features > 0
                         ? std::min<int>(params.max_features, static_cast<int>(x.cols))
                         : std::max(1, static_cast<int>(std::floor(std::sqrt(
                                           static_cast<double>(x.cols)))));
    std::vector<size_t> samples = sample_indices;
    b.grow(std::move(samples), 0);
    return std::move(b.tree);
}

int predict_tree(const DecisionTree& tree, std::span<const double> row) {
    int node = 0;
    while (tree.nodes[node].feature >= 0) {
        const TreeNode& n = tree.nodes[node];
        node = row[n.feature] <= n.threshold ? n.left : n.right;
    }
    return tree.nodes[node].leaf_class;
}

}  // namespace fishfresh
