#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fishfresh/classify/forest.hpp"
#include "fishfresh/classify/knn.hpp"
#include "fishfresh/classify/linear.hpp"
#include "fishfresh/classify/mlp.hpp"
#include "fishfresh/classify/standardize.hpp"
#include "fishfresh/matrix.hpp"

namespace fishfresh {

enum class ModelKind { KNN, LR, MLP, RF, ET };

std::string to_string(ModelKind kind);

// Parses knn/lr/mlp (or ann)/rf/et. Explicitly rejects svm, lgbm and
// catboost with a message naming the exclusion.
ModelKind model_kind_from_string(const std::string& name);

using Hyperparameters = std::map<std::string, double>;

// Trained classifier plus everything needed to reproduce and apply it.
// Distance- and gradient-based kinds carry the feature scaler fitted on
// their training rows; tree ensembles train on raw features.
struct ModelArtifact {
    ModelKind kind = ModelKind::KNN;
    Hyperparameters hyperparameters;  // resolved values actually used
    std::string feature_set_id;
    unsigned train_seed = 0;
    size_t n_features = 0;
    int n_classes = 3;
    std::optional<Scaler> scaler;
    std::variant<KnnModel, LogisticModel, MlpModel, ForestModel> state;
};

// Trains one model. Unknown hyperparameter names raise ArgumentError;
// single-class training data raises TrainingError.
ModelArtifact train_model(ModelKind kind, const Hyperparameters& overrides, const DataMatrix& x,
                          const std::vector<int>& y, unsigned seed,
                          const std::string& feature_set_id = "", int n_classes = 3);

// One label per row; rejects matrices whose width differs from the model's
// feature count.
std::vector<int> predict(const ModelArtifact& model, const DataMatrix& x);

void save_model(const ModelArtifact& model, const std::filesystem::path& path);
ModelArtifact load_model(const std::filesystem::path& path);

// Default hyperparameters per kind (exposed for documentation and tests).
Hyperparameters default_hyperparameters(ModelKind kind);

}  // namespace fishfresh
