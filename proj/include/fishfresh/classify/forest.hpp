#pragma once

#include <vector>

#include "fishfresh/classify/tree.hpp"
#include "fishfresh/matrix.hpp"

namespace fishfresh {

struct ForestParams {
    TreeParams tree;
    int n_trees = 300;
    bool bootstrap = true;
};

// Tree ensemble with hard majority voting; vote ties resolve to the lowest
// class index. Tree t draws from a stream seeded by (seed, t), so parallel
// tree construction cannot change the result.
struct ForestModel {
    ForestParams params;
    size_t n_features = 0;
    int n_classes = 3;
    unsigned seed = 0;
    std::vector<DecisionTree> trees;
};

// Random forest defaults: gini, depth 15, 300 trees, bootstrap,
// best-threshold splits.
ForestParams random_forest_defaults();

// Extra-trees defaults: entropy, depth 35, 180 trees, bootstrap,
// min_samples_split 3, uniform random thresholds.
ForestParams extra_trees_defaults();

ForestModel train_forest(const ForestParams& params, const DataMatrix& x,
                         const std::vector<int>& y, int n_classes, unsigned seed);

std::vector<int> predict_forest(const ForestModel& model, const DataMatrix& x);

}  // namespace fishfresh
