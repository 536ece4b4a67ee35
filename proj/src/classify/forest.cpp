#include "fishfresh/classify/forest.hpp"

#include "fishfresh/errors.hpp"
#include "fishfresh/rng.hpp"

namespace fishfresh {

ForestParams random_forest_defaults() {
    ForestParams p;
    p.tree.criterion = SplitCriterion::Gini;
    p.tree.strategy = SplitStrategy::BestThreshold;
    p.tree.max_depth = 15;
    p.tree.min_samples_split = 2;
    p.tree.min_samples_leaf = 1;
    p.n_trees = 300;
    p.bootstrap = true;
    return p;
}

ForestParams extra_trees_defaults() {
    ForestParams p;
    p.tree.criterion = SplitCriterion::Entropy;
    p.tree.strategy = SplitStrategy::RandomThreshold;
    p.tree.max_depth = 35;
    p.tree.min_samples_split = 3;
    p.tree.min_samples_leaf = 1;
    p.n_trees = 180;
    p.bootstrap = true;
    return p;
}

ForestModel train_forest(const ForestParams& params, const DataMatrix& x,
                         const std::vector<int>& y, int n_classes, unsigned seed) {
    if (x.rows == 0 || x.rows != y.size()) throw ArgumentError("train_forest: bad training shape");

    ForestModel model;
    model.params = params;
    model.n_features = x.cols;
    model.n_classes = n_classes;
    model.seed = seed;
    model.trees.resize(params.n_trees);

    const size_t n = x.rows;
    #pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < params.n_trees; ++t) {
        // Independent stream per tree: build order cannot change results.
        std::mt19937 rng = seeded_rng(seed, static_cast<unsigned>(t));
        std::vector<size_t> samples(n);
        if (params.bootstrap) {
            for (size_t i = 0; i < n; ++i) samples[i] = rng() % n;
        } else {
            for (size_t i = 0; i < n; ++i) samples[i] = i;
        }
        model.trees[t] = build_tree(params.tree, x, y, n_classes, samples, rng);
    }
    return model;
}

std::vector<int> predict_forest(const ForestModel& model, const DataMatrix& x) {
    if (x.cols != model.n_features)
        throw ArgumentError("predict_forest: feature count mismatch");
    std::vector<int> out(x.rows);
    #pragma omp parallel for schedule(dynamic)
    for (size_t r = 0; r < x.rows; ++r) {
        std::vector<int> votes(model.n_classes, 0);
        for (const DecisionTree& tree : model.trees) ++votes[predict_tree(tree, x.row(r))];
        int best = 0;
        for (int c = 1; c < model.n_classes; ++c)
            if (votes[c] > votes[best]) best = c;
        out[r] = best;
    }
    return out;
}

}  // namespace fishfresh
