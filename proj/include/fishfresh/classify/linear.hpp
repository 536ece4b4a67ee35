#pragma once

#include <vector>

#include "fishfresh/matrix.hpp"

namespace fishfresh {

struct LogisticParams {
    double C = 1.0;       // inverse L2 strength; bias is not penalized
    int max_iter = 300;
    double tol = 1e-8;    // stop when the gradient sup-norm falls below this
};

// Multinomial logistic regression trained by full-batch gradient descent
// with a backtracking step size (deterministic, zero-initialized).
struct LogisticModel {
    LogisticParams params;
    size_t n_features = 0;
    int n_classes = 3;
    std::vector<double> weights;  // n_classes x n_features, row-major
    std::vector<double> bias;     // n_classes
};

LogisticModel train_logistic(const LogisticParams& params, const DataMatrix& x,
                             const std::vector<int>& y, int n_classes);

std::vector<int> predict_logistic(const LogisticModel& model, const DataMatrix& x);
DataMatrix predict_proba_logistic(const LogisticModel& model, const DataMatrix& x);

// Mean regularized cross-entropy and its gradient at the given parameter
// vector (weights then bias, row-major). Exposed for the finite-difference
// gradient checks.
struct LossGrad {
    double loss = 0.0;
    std::vector<double> grad;
};
LossGrad logistic_loss_and_gradient(const std::vector<double>& params_flat, const DataMatrix& x,
                                    const std::vector<int>& y, int n_classes, double C);

}  // namespace fishfresh
