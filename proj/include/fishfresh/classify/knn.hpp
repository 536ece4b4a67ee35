#pragma once

#include <vector>

#include "fishfresh/matrix.hpp"

namespace fishfresh {

struct KnnParams {
    int k = 17;
    int minkowski_p = 2;
    bool distance_weighted = true;
};

// Brute-force k-nearest-neighbours; the model is the training data.
struct KnnModel {
    KnnParams params;
    int n_classes = 3;
    DataMatrix train_x;
    std::vector<int> train_y;
};

KnnModel train_knn(const KnnParams& params, const DataMatrix& x, const std::vector<int>& y,
                   int n_classes);

// Weighted neighbour vote per row; vote ties resolve to the lowest class
// index. An exact-match neighbour (distance 0) takes the whole vote.
std::vector<int> predict_knn(const KnnModel& model, const DataMatrix& x);

}  // namespace fishfresh
