#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "fishfresh/classify/metrics.hpp"
#include "fishfresh/classify/model.hpp"
#include "fishfresh/errors.hpp"
#include "fishfresh/rng.hpp"

namespace fs = std::filesystem;
using namespace fishfresh;

namespace {

// Small separable 2-D blobs, one per class.
void make_blobs(int per_class, int n_classes, unsigned seed, DataMatrix& x,
                std::vector<int>& y) {
    std::mt19937 rng = seeded_rng(seed, 0);
    x = DataMatrix(0, 2);
    y.clear();
    for (int c = 0; c < n_classes; ++c) {
        for (int i = 0; i < per_class; ++i) {
            const double jitter1 = (static_cast<double>(rng() % 1000) / 1000.0 - 0.5);
            const double jitter2 = (static_cast<double>(rng() % 1000) / 1000.0 - 0.5);
            const double row[2] = {c * 4.0 + jitter1, -c * 3.0 + jitter2};
            x.append_row(row);
            y.push_back(c);
        }
    }
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("standardize: definition, constants pass through, no leakage") {
    DataMatrix train(4, 2);
    const double col0[4] = {8, 12, 8, 12};  // mean 10, std 2
    for (int r = 0; r < 4; ++r) {
        train.at(r, 0) = col0[r];
        train.at(r, 1) = 5.0;  // constant column
    }
    const Scaler s = fit_scaler(train);
    DataMatrix probe(1, 2);
    probe.at(0, 0) = 12.0;
    probe.at(0, 1) = 5.0;
    const DataMatrix out = apply_scaler(s, probe);
    CHECK(out.at(0, 0) == doctest::Approx(1.0));
    CHECK(out.at(0, 1) == 5.0);  // unchanged

    // Applying train statistics to a shifted test set does not recenter it.
    DataMatrix test(2, 2);
    test.at(0, 0) = 100.0;
    test.at(1, 0) = 100.0;
    const DataMatrix test_out = apply_scaler(s, test);
    CHECK(test_out.at(0, 0) == doctest::Approx(45.0));
}

TEST_CASE("knn: nearest neighbour basics and tie rule") {
    DataMatrix x(2, 1);
    x.at(0, 0) = 0.0;
    x.at(1, 0) = 10.0;
    const std::vector<int> y = {0, 1};
    KnnParams p;
    p.k = 1;
    const KnnModel m = train_knn(p, x, y, 2);

    DataMatrix q(1, 1);
    q.at(0, 0) = 1.0;
    CHECK(predict_knn(m, q) == std::vector<int>{0});
    // A training point is its own nearest neighbour.
    CHECK(predict_knn(m, x) == std::vector<int>{0, 1});

    // k=2 with equidistant neighbours of classes 0 and 2: lowest index wins.
    DataMatrix x3(2, 1);
    x3.at(0, 0) = -1.0;
    x3.at(1, 0) = 1.0;
    KnnParams p2;
    p2.k = 2;
    const KnnModel m3 = train_knn(p2, x3, {2, 0}, 3);
    DataMatrix origin(1, 1);
    origin.at(0, 0) = 0.0;
    CHECK(predict_knn(m3, origin) == std::vector<int>{0});
}

TEST_CASE("logistic: separable 1-D data reaches training accuracy 1") {
    // Convexity oracle: descend to a tight tolerance, then check separation.
    DataMatrix x(6, 1);
    const double xs[6] = {-3.0, -2.5, -2.0, 2.0, 2.5, 3.0};
    for (int i = 0; i < 6; ++i) x.at(i, 0) = xs[i];
    const std::vector<int> y = {0, 0, 0, 1, 1, 1};
    LogisticParams params;
    params.max_iter = 2000;
    params.tol = 1e-8;
    const LogisticModel m = train_logistic(params, x, y, 2);
    CHECK(predict_logistic(m, x) == y);

    // With the Table-3 defaults, the same data still separates.
    const LogisticModel m_default = train_logistic({}, x, y, 2);
    CHECK(predict_logistic(m_default, x) == y);
}

TEST_CASE("logistic: analytic gradient matches central differences") {
    std::mt19937 rng = seeded_rng(211, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const size_t n = 4 + rng() % 13;  // 4..16 samples
        const size_t d = 2 + rng() % 4;
        const int k = 3;
        DataMatrix x(n, d);
        std::vector<int> y(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < d; ++j)
                x.at(i, j) = (static_cast<double>(rng() % 2000) / 1000.0) - 1.0;
            y[i] = static_cast<int>(rng() % k);
        }
        std::vector<double> theta(k * d + k);
        for (double& t : theta) t = (static_cast<double>(rng() % 2000) / 1000.0) - 1.0;

        const LossGrad lg = logistic_loss_and_gradient(theta, x, y, k, 1.0);
        const double h = 1e-6;
        for (size_t j = 0; j < theta.size(); j += 1 + j / 7) {  // subsample coordinates
            std::vector<double> tp = theta, tm = theta;
            tp[j] += h;
            tm[j] -= h;
            const double fd = (logistic_loss_and_gradient(tp, x, y, k, 1.0).loss -
                               logistic_loss_and_gradient(tm, x, y, k, 1.0).loss) /
                              (2 * h);
            REQUIRE(rel_diff(lg.grad[j], fd) < 1e-5);
        }
    }
}

TEST_CASE("mlp: gradient check at initialization") {
    std::mt19937 rng = seeded_rng(223, 0);
    for (int trial = 0; trial < 10; ++trial) {
        MlpParams params;
        params.hidden = 5;
        DataMatrix x(4, 3);
        std::vector<int> y(4);
        for (size_t i = 0; i < 4; ++i) {
            for (size_t j = 0; j < 3; ++j)
                x.at(i, j) = (static_cast<double>(rng() % 2000) / 1000.0) - 1.0;
            y[i] = static_cast<int>(rng() % 3);
        }
        MlpModel m = init_mlp(params, 3, 3, 1000 + trial);
        const MlpLossGrad lg = mlp_loss_and_gradient(m, x, y);
        std::vector<double> flat = mlp_flatten(m);
        const double h = 1e-6;
        for (size_t j = 0; j < flat.size(); j += 3) {
            std::vector<double> fp = flat, fm = flat;
            fp[j] += h;
            fm[j] -= h;
            MlpModel mp = m, mm = m;
            mlp_unflatten(mp, fp);
            mlp_unflatten(mm, fm);
            const double fd =
                (mlp_loss_and_gradient(mp, x, y).loss - mlp_loss_and_gradient(mm, x, y).loss) /
                (2 * h);
            REQUIRE(rel_diff(lg.grad[j], fd) < 1e-4);
        }
    }
}

TEST_CASE("mlp: softmax rows sum to one and training separates blobs") {
    DataMatrix x;
    std::vector<int> y;
    make_blobs(12, 3, 5, x, y);
    MlpParams params;
    params.hidden = 16;
    params.max_epochs = 200;
    const MlpModel m = train_mlp(params, x, y, 3, 42);
    const DataMatrix proba = predict_proba_mlp(m, x);
    for (size_t r = 0; r < proba.rows; ++r) {
        double sum = 0.0;
        for (int c = 0; c < 3; ++c) sum += proba.at(r, c);
        REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
    const std::vector<int> pred = predict_mlp(m, x);
    int correct = 0;
    for (size_t i = 0; i < y.size(); ++i) correct += pred[i] == y[i];
    CHECK(correct == static_cast<int>(y.size()));
}

TEST_CASE("forest: determinism in the seed and blob separation") {
    DataMatrix x;
    std::vector<int> y;
    make_blobs(20, 3, 7, x, y);

    ForestParams params = random_forest_defaults();
    params.n_trees = 25;
    const ForestModel a = train_forest(params, x, y, 3, 9);
    const ForestModel b = train_forest(params, x, y, 3, 9);
    CHECK(predict_forest(a, x) == predict_forest(b, x));

    const std::vector<int> pred = predict_forest(a, x);
    int correct = 0;
    for (size_t i = 0; i < y.size(); ++i) correct += pred[i] == y[i];
    CHECK(correct >= static_cast<int>(0.95 * y.size()));

    const ForestModel et = train_forest(extra_trees_defaults(), x, y, 3, 9);
    const std::vector<int> et_pred = predict_forest(et, x);
    int et_correct = 0;
    for (size_t i = 0; i < y.size(); ++i) et_correct += et_pred[i] == y[i];
    CHECK(et_correct >= static_cast<int>(0.9 * y.size()));
}

TEST_CASE("metrics: hand-computed confusion fixture") {
    // Confusion [[5,0,0],[0,0,5],[0,0,5]] as label vectors.
    std::vector<int> y_true, y_pred;
    for (int i = 0; i < 5; ++i) {
        y_true.push_back(0);
        y_pred.push_back(0);
    }
    for (int i = 0; i < 5; ++i) {
        y_true.push_back(1);
        y_pred.push_back(2);
    }
    for (int i = 0; i < 5; ++i) {
        y_true.push_back(2);
        y_pred.push_back(2);
    }
    const EvalReport rep = evaluate(y_true, y_pred, 3);
    CHECK(rep.confusion[0][0] == 5);
    CHECK(rep.confusion[1][2] == 5);
    CHECK(rep.confusion[2][2] == 5);
    CHECK(rep.accuracy == doctest::Approx(10.0 / 15.0).epsilon(1e-12));
    CHECK(rep.macro_precision == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(rep.macro_recall == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
    CHECK(rep.macro_f1 == doctest::Approx(0.5556).epsilon(1e-3));
}

TEST_CASE("metrics: perfect and constant predictors") {
    const std::vector<int> y = {0, 1, 2, 0, 1, 2};
    const EvalReport perfect = evaluate(y, y, 3);
    CHECK(perfect.accuracy == 1.0);
    CHECK(perfect.macro_precision == doctest::Approx(1.0));
    CHECK(perfect.macro_recall == doctest::Approx(1.0));
    CHECK(perfect.macro_f1 == doctest::Approx(1.0));

    const std::vector<int> constant(6, 0);
    const EvalReport rep = evaluate(y, constant, 3);
    CHECK(rep.accuracy == doctest::Approx(1.0 / 3.0));
    // Balanced truth: accuracy equals the mean per-class recall.
    CHECK(rep.accuracy == doctest::Approx(rep.macro_recall));

    CHECK_THROWS_AS(evaluate({0, 1}, {0}, 3), ArgumentError);
}

TEST_CASE("kfold: partition, stratification, determinism") {
    std::vector<int> labels;
    for (int i = 0; i < 5; ++i) {
        labels.push_back(0);
        labels.push_back(1);
    }
    const auto folds = kfold_indices(10, 5, labels, 3);
    REQUIRE(folds.size() == 5);
    std::vector<int> seen(10, 0);
    for (const auto& [train_idx, test_idx] : folds) {
        CHECK(train_idx.size() == 8);
        CHECK(test_idx.size() == 2);
        int per_class[2] = {0, 0};
        for (size_t i : test_idx) {
            ++seen[i];
            ++per_class[labels[i]];
        }
        CHECK(per_class[0] == 1);
        CHECK(per_class[1] == 1);
    }
    for (int s : seen) CHECK(s == 1);

    const auto again = kfold_indices(10, 5, labels, 3);
    CHECK(folds == again);
    CHECK_THROWS_AS(kfold_indices(10, 1, labels, 3), ArgumentError);
    CHECK_THROWS_AS(kfold_indices(10, 6, labels, 3), ArgumentError);  // class smaller than k
}

TEST_CASE("model facade: defaults, unknown hyperparameters, degenerate labels") {
    DataMatrix x;
    std::vector<int> y;
    make_blobs(10, 3, 11, x, y);

    const ModelArtifact knn = train_model(ModelKind::KNN, {{"k", 3}}, x, y, 1, "FS1");
    CHECK(knn.hyperparameters.at("k") == 3);
    CHECK(knn.scaler.has_value());
    CHECK(predict(knn, x).size() == x.rows);

    CHECK_THROWS_AS(train_model(ModelKind::KNN, {{"bogus", 1}}, x, y, 1), ArgumentError);
    CHECK_THROWS_AS(model_kind_from_string("svm"), ArgumentError);
    CHECK_THROWS_AS(model_kind_from_string("lgbm"), ArgumentError);
    CHECK_THROWS_AS(model_kind_from_string("catboost"), ArgumentError);
    CHECK(model_kind_from_string("ann") == ModelKind::MLP);

    const std::vector<int> single(x.rows, 1);
    CHECK_THROWS_AS(train_model(ModelKind::RF, {}, x, single, 1), TrainingError);

    // Dimension mismatch at predict time.
    DataMatrix wrong(1, 5);
    CHECK_THROWS_AS(predict(knn, wrong), ArgumentError);
}

TEST_CASE("model facade: no-leakage permutation property") {
    DataMatrix x;
    std::vector<int> y;
    make_blobs(15, 3, 13, x, y);
    const ModelArtifact m = train_model(ModelKind::LR, {}, x, y, 1, "FS1");

    DataMatrix probe(6, 2);
    for (int i = 0; i < 6; ++i) {
        probe.at(i, 0) = i * 0.7 - 2.0;
        probe.at(i, 1) = 1.3 - i * 0.4;
    }
    const std::vector<int> direct = predict(m, probe);
    DataMatrix reversed(6, 2);
    for (int i = 0; i < 6; ++i) {
        reversed.at(i, 0) = probe.at(5 - i, 0);
        reversed.at(i, 1) = probe.at(5 - i, 1);
    }
    const std::vector<int> perm = predict(m, reversed);
    for (int i = 0; i < 6; ++i) REQUIRE(perm[i] == direct[5 - i]);
}

TEST_CASE("model facade: serialization round-trips to identical predictions") {
    DataMatrix x;
    std::vector<int> y;
    make_blobs(12, 3, 17, x, y);

    DataMatrix probe;
    std::vector<int> ignored;
    make_blobs(5, 3, 18, probe, ignored);

    for (ModelKind kind :
         {ModelKind::KNN, ModelKind::LR, ModelKind::MLP, ModelKind::RF, ModelKind::ET}) {
        Hyperparameters hp;
        if (kind == ModelKind::MLP) hp = {{"hidden", 8}, {"max_iter", 50}};
        if (kind == ModelKind::RF || kind == ModelKind::ET) hp = {{"n_estimators", 15}};
        const ModelArtifact m = train_model(kind, hp, x, y, 3, "FS2");
        const fs::path path =
            fs::temp_directory_path() / ("fishfresh_model_" + to_string(kind) + ".json");
        save_model(m, path);
        const ModelArtifact loaded = load_model(path);
        CHECK(loaded.kind == m.kind);
        CHECK(loaded.feature_set_id == "FS2");
        REQUIRE(predict(loaded, probe) == predict(m, probe));
        fs::remove(path);
    }
}
