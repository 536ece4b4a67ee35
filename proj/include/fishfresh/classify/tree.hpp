#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fishfresh/matrix.hpp"

namespace fishfresh {

enum class SplitCriterion { Gini, Entropy };
enum class SplitStrategy { BestThreshold, RandomThreshold };

struct TreeParams {
    SplitCriterion criterion = SplitCriterion::Gini;
    SplitStrategy strategy = SplitStrategy::BestThreshold;
    int max_depth = 15;
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    int max_features = 0;  // 0 -> floor(sqrt(n_features)), at least 1
};

struct TreeNode {
    int feature = -1;       // -1 marks a leaf
    double threshold = 0.0;  // go left when value <= threshold
    int left = -1;
    int right = -1;
    int leaf_class = 0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
};

// Grows one tree on the given sample indices (duplicates allowed, as drawn
// by a bootstrap). All randomness comes from `rng`.
DecisionTree build_tree(const TreeParams& params, const DataMatrix& x,
                        const std::vector<int>& y, int n_classes,
                        const std::vector<size_t>& sample_indices, std::mt19937& rng);

int predict_tree(const DecisionTree& tree, std::span<const double> row);

}  // namespace fishfresh
