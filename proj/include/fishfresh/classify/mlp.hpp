#pragma once

#include <vector>

#include "fishfresh/matrix.hpp"

namespace fishfresh {

struct MlpParams {
    int hidden = 128;          // single hidden layer width
    double alpha = 0.001;      // L2 penalty
    double learning_rate = 1e-3;
    int batch_size = 32;
    int max_epochs = 500;
    double beta1 = 0.9;        // adaptive-moment decay rates
    double beta2 = 0.999;
    double adam_eps = 1e-8;
};

// One-hidden-layer perceptron, tanh activation, softmax output, trained
// with mini-batch adaptive-moment descent. Deterministic given the seed.
struct MlpModel {
    MlpParams params;
    size_t n_features = 0;
    int n_classes = 3;
    std::vector<double> w1;  // n_features x hidden
    std::vector<double> b1;  // hidden
    std::vector<double> w2;  // hidden x n_classes
    std::vector<double> b2;  // n_classes
};

MlpModel train_mlp(const MlpParams& params, const DataMatrix& x, const std::vector<int>& y,
                   int n_classes, unsigned seed);

std::vector<int> predict_mlp(const MlpModel& model, const DataMatrix& x);
DataMatrix predict_proba_mlp(const MlpModel& model, const DataMatrix& x);

// Glorot-uniform initialized model without any training steps (the gradient
// check anchors at initialization).
MlpModel init_mlp(const MlpParams& params, size_t n_features, int n_classes, unsigned seed);

// Loss and gradient over a batch at the model's current parameters; the
// flat layout is w1, b1, w2, b2.
struct MlpLossGrad {
    double loss = 0.0;
    std::vector<double> grad;
};
MlpLossGrad mlp_loss_and_gradient(const MlpModel& model, const DataMatrix& x,
                                  const std::vector<int>& y);

// Parameter vector access used by the finite-difference checks.
std::vector<double> mlp_flatten(const MlpModel& model);
void mlp_unflatten(MlpModel& model, const std::vector<double>& flat);

}  // namespace fishfresh
