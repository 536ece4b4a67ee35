#include "fishfresh/classify/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "fishfresh/errors.hpp"

namespace fishfresh {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::KNN: return "knn";
        case ModelKind::LR: return "lr";
        case ModelKind::MLP: return "mlp";
        case ModelKind::RF: return "rf";
        case ModelKind::ET: return "et";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == "knn") return ModelKind::KNN;
    if (n == "lr" || n == "logistic") return ModelKind::LR;
    if (n == "mlp" || n == "ann") return ModelKind::MLP;
    if (n == "rf" || n == "random_forest") return ModelKind::RF;
    if (n == "et" || n == "extra_trees") return ModelKind::ET;
    if (n == "svm" || n == "lgbm" || n == "lightgbm" || n == "cb" || n == "catboost")
        throw ArgumentError("model '" + name +
                            "' is not supported: SVM (RBF), LGBM and CatBoost are outside this "
                            "toolkit; use knn, lr, mlp, rf or et");
    throw ArgumentError("unknown model kind '" + name + "'");
}

Hyperparameters default_hyperparameters(ModelKind kind) {
    switch (kind) {
        case ModelKind::KNN:
            return {{"k", 17}, {"p", 2}, {"distance_weights", 1}};
        case ModelKind::LR:
            return {{"C", 1.0}, {"max_iter", 300}};
        case ModelKind::MLP:
            return {{"hidden", 128}, {"alpha", 0.001}, {"learning_rate", 0.001},
                    {"batch_size", 32}, {"max_iter", 500}};
        case ModelKind::RF:
            return {{"n_estimators", 300}, {"max_depth", 15}, {"min_samples_split", 2},
                    {"min_samples_leaf", 1}, {"max_features", 0}};
        case ModelKind::ET:
            return {{"n_estimators", 180}, {"max_depth", 35}, {"min_samples_split", 3},
                    {"min_samples_leaf", 1}, {"max_features", 0}};
    }
    return {};
}

namespace {

Hyperparameters resolve_hyperparameters(ModelKind kind, const Hyperparameters& overrides) {
    Hyperparameters hp = default_hyperparameters(kind);
    for (const auto& [key, value] : overrides) {
        if (hp.find(key) == hp.end())
            throw ArgumentError("unknown hyperparameter '" + key + "' for model " +
                                to_string(kind));
        hp[key] = value;
    }
    return hp;
}

bool needs_scaler(ModelKind kind) {
    return kind == ModelKind::KNN || kind == ModelKind::LR || kind == ModelKind::MLP;
}

void require_multiclass(const std::vector<int>& y) {
    const std::set<int> distinct(y.begin(), y.end());
    if (distinct.size() < 2)
        throw TrainingError("training data is degenerate: only " +
                            std::to_string(distinct.size()) + " class present");
}

}  // namespace

ModelArtifact train_model(ModelKind kind, const Hyperparameters& overrides, const DataMatrix& x,
                          const std::vector<int>& y, unsigned seed,
                          const std::string& feature_set_id, int n_classes) {
    if (x.rows == 0 || x.rows != y.size()) throw ArgumentError("train_model: bad training shape");
    require_multiclass(y);

    ModelArtifact art;
    art.kind = kind;
    art.hyperparameters = resolve_hyperparameters(kind, overrides);
    art.feature_set_id = feature_set_id;
    art.train_seed = seed;
    art.n_features = x.cols;
    art.n_classes = n_classes;

    const Hyperparameters& hp = art.hyperparameters;
    const DataMatrix* train = &x;
    DataMatrix scaled;
    if (needs_scaler(kind)) {
        art.scaler = fit_scaler(x);
        scaled = apply_scaler(*art.scaler, x);
        train = &scaled;
    }

    switch (kind) {
        case ModelKind::KNN: {
            KnnParams p;
            p.k = static_cast<int>(hp.at("k"));
            p.minkowski_p = static_cast<int>(hp.at("p"));
            p.distance_weighted = hp.at("distance_weights") != 0.0;
            art.state = train_knn(p, *train, y, n_classes);
            break;
        }
        case ModelKind::LR: {
            LogisticParams p;
            p.C = hp.at("C");
            p.max_iter = static_cast<int>(hp.at("max_iter"));
            art.state = train_logistic(p, *train, y, n_classes);
            break;
        }
        case ModelKind::MLP: {
            MlpParams p;
            p.hidden = static_cast<int>(hp.at("hidden"));
            p.alpha = hp.at("alpha");
            p.learning_rate = hp.at("learning_rate");
            p.batch_size = static_cast<int>(hp.at("batch_size"));
            p.max_epochs = static_cast<int>(hp.at("max_iter"));
            art.state = train_mlp(p, *train, y, n_classes, seed);
            break;
        }
        case ModelKind::RF:
        case ModelKind::ET: {
            ForestParams p = kind == ModelKind::RF ? random_forest_defaults()
                                                   : extra_trees_defaults();
            p.n_trees = static_cast<int>(hp.at("n_estimators"));
            p.tree.max_depth = static_cast<int>(hp.at("max_depth"));
            p.tree.min_samples_split = static_cast<int>(hp.at("min_samples_split"));
            p.tree.min_samples_leaf = static_cast<int>(hp.at("min_samples_leaf"));
            p.tree.max_features = static_cast<int>(hp.at("max_features"));
            art.state = train_forest(p, *train, y, n_classes, seed);
            break;
        }
    }
    return art;
}

std::vector<int> predict(const ModelArtifact& model, const DataMatrix& x) {
    if (x.cols != model.n_features)
        throw ArgumentError("predict: expected " + std::to_string(model.n_features) +
                            " features, got " + std::to_string(x.cols));
    const DataMatrix* input = &x;
    DataMatrix scaled;
    if (model.scaler) {
        scaled = apply_scaler(*model.scaler, x);
        input = &scaled;
    }
    switch (model.kind) {
        case ModelKind::KNN: return predict_knn(std::get<KnnModel>(model.state), *input);
        case ModelKind::LR: return predict_logistic(std::get<LogisticModel>(model.state), *input);
        case ModelKind::MLP: return predict_mlp(std::get<MlpModel>(model.state), *input);
        case ModelKind::RF:
        case ModelKind::ET: return predict_forest(std::get<ForestModel>(model.state), *input);
    }
    throw std::logic_error("predict: unreachable");
}

namespace {

using nlohmann::json;

json matrix_to_json(const DataMatrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

DataMatrix matrix_from_json(const json& j) {
    DataMatrix m;
    m.rows = j.at("rows").get<size_t>();
    m.cols = j.at("cols").get<size_t>();
    m.data = j.at("data").get<std::vector<double>>();
    if (m.data.size() != m.rows * m.cols) throw SchemaError("model file: matrix shape mismatch");
    return m;
}

json forest_to_json(const ForestModel& f) {
    json trees = json::array();
    for (const DecisionTree& t : f.trees) {
        json nodes = json::array();
        for (const TreeNode& n : t.nodes)
            nodes.push_back({n.feature, n.threshold, n.left, n.right, n.leaf_class});
        trees.push_back(std::move(nodes));
    }
    return json{{"criterion", f.params.tree.criterion == SplitCriterion::Gini ? "gini" : "entropy"},
                {"strategy", f.params.tree.strategy == SplitStrategy::BestThreshold
                                 ? "best"
                                 : "random"},
                {"trees", std::move(trees)}};
}

ForestModel forest_from_json(const json& j, const ForestParams& base) {
    ForestModel f;
    f.params = base;
    f.params.tree.criterion =
        j.at("criterion").get<std::string>() == "gini" ? SplitCriterion::Gini
                                                       : SplitCriterion::Entropy;
    f.params.tree.strategy = j.at("strategy").get<std::string>() == "best"
                                 ? SplitStrategy::BestThreshold
                                 : SplitStrategy::RandomThreshold;
    for (const json& tn : j.at("trees")) {
        DecisionTree tree;
        for (const json& n : tn)
            tree.nodes.push_back({n.at(0).get<int>(), n.at(1).get<double>(), n.at(2).get<int>(),
                                  n.at(3).get<int>(), n.at(4).get<int>()});
        f.trees.push_back(std::move(tree));
    }
    return f;
}

}  // namespace

void save_model(const ModelArtifact& model, const std::filesystem::path& path) {
    json j;
    j["format"] = "fishfresh-model";
    j["format_version"] = 1;
    j["kind"] = to_string(model.kind);
    j["hyperparameters"] = model.hyperparameters;
    j["feature_set_id"] = model.feature_set_id;
    j["train_seed"] = model.train_seed;
    j["n_features"] = model.n_features;
    j["n_classes"] = model.n_classes;
    if (model.scaler)
        j["scaler"] = {{"mean", model.scaler->mean}, {"scale", model.scaler->scale}};

    switch (model.kind) {
        case ModelKind::KNN: {
            const auto& s = std::get<KnnModel>(model.state);
            j["state"] = {{"train_x", matrix_to_json(s.train_x)}, {"train_y", s.train_y}};
            break;
        }
        case ModelKind::LR: {
            const auto& s = std::get<LogisticModel>(model.state);
            j["state"] = {{"weights", s.weights}, {"bias", s.bias}};
            break;
        }
        case ModelKind::MLP: {
            const auto& s = std::get<MlpModel>(model.state);
            j["state"] = {{"hidden", s.params.hidden}, {"w1", s.w1}, {"b1", s.b1},
                          {"w2", s.w2}, {"b2", s.b2}};
            break;
        }
        case ModelKind::RF:
        case ModelKind::ET: {
            j["state"] = forest_to_json(std::get<ForestModel>(model.state));
            break;
        }
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot write model file: " + path.string());
    f << j.dump() << "\n";
}

ModelArtifact load_model(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open model file: " + path.string());
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw SchemaError("model file " + path.string() + ": " + e.what());
    }
    if (j.value("format", "") != "fishfresh-model")
        throw SchemaError("not a model file: " + path.string());

    ModelArtifact art;
    art.kind = model_kind_from_string(j.at("kind").get<std::string>());
    art.hyperparameters = j.at("hyperparameters").get<Hyperparameters>();
    art.feature_set_id = j.value("feature_set_id", "");
    art.train_seed = j.value("train_seed", 0u);
    art.n_features = j.at("n_features").get<size_t>();
    art.n_classes = j.at("n_classes").get<int>();
    if (j.contains("scaler")) {
        Scaler s;
        s.mean = j["scaler"].at("mean").get<std::vector<double>>();
        s.scale = j["scaler"].at("scale").get<std::vector<double>>();
        art.scaler = std::move(s);
    }

    const json& state = j.at("state");
    const Hyperparameters& hp = art.hyperparameters;
    switch (art.kind) {
        case ModelKind::KNN: {
            KnnModel s;
            s.params.k = static_cast<int>(hp.at("k"));
            s.params.minkowski_p = static_cast<int>(hp.at("p"));
            s.params.distance_weighted = hp.at("distance_weights") != 0.0;
            s.n_classes = art.n_classes;
            s.train_x = matrix_from_json(state.at("train_x"));
            s.train_y = state.at("train_y").get<std::vector<int>>();
            art.state = std::move(s);
            break;
        }
        case ModelKind::LR: {
            LogisticModel s;
            s.params.C = hp.at("C");
            s.params.max_iter = static_cast<int>(hp.at("max_iter"));
            s.n_features = art.n_features;
            s.n_classes = art.n_classes;
            s.weights = state.at("weights").get<std::vector<double>>();
            s.bias = state.at("bias").get<std::vector<double>>();
            art.state = std::move(s);
            break;
        }
        case ModelKind::MLP: {
            MlpModel s;
            s.params.hidden = state.at("hidden").get<int>();
            s.n_features = art.n_features;
            s.n_classes = art.n_classes;
            s.w1 = state.at("w1").get<std::vector<double>>();
            s.b1 = state.at("b1").get<std::vector<double>>();
            s.w2 = state.at("w2").get<std::vector<double>>();
            s.b2 = state.at("b2").get<std::vector<double>>();
            art.state = std::move(s);
            break;
        }
        case ModelKind::RF:
        case ModelKind::ET: {
            ForestParams base = art.kind == ModelKind::RF ? random_forest_defaults()
                                                          : extra_trees_defaults();
            ForestModel s = forest_from_json(state, base);
            s.n_features = art.n_features;
            s.n_classes = art.n_classes;
            s.seed = art.train_seed;
            art.state = std::move(s);
            break;
        }
    }
    return art;
}

}  // namespace fishfresh
