#include "fishfresh/classify/metrics.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fishfresh/errors.hpp"
#include "fishfresh/rng.hpp"

namespace fishfresh {

EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    int n_classes) {
    if (y_true.size() != y_pred.size())
        throw ArgumentError("evaluate: label vectors differ in length");
    if (y_true.empty()) throw ArgumentError("evaluate: empty label vectors");

    EvalReport rep;
    rep.n_classes = n_classes;
    rep.confusion.assign(n_classes, std::vector<long>(n_classes, 0));
    for (size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] < 0 || y_true[i] >= n_classes || y_pred[i] < 0 || y_pred[i] >= n_classes)
            throw ArgumentError("evaluate: label outside [0, n_classes)");
        ++rep.confusion[y_true[i]][y_pred[i]];
    }

    long diag = 0;
    for (int c = 0; c < n_classes; ++c) diag += rep.confusion[c][c];
    rep.accuracy = static_cast<double>(diag) / static_cast<double>(y_true.size());

    for (int c = 0; c < n_classes; ++c) {
        long tp = rep.confusion[c][c];
        long fp = 0, fn = 0;
        for (int o = 0; o < n_classes; ++o) {
            if (o == c) continue;
            fp += rep.confusion[o][c];
            fn += rep.confusion[c][o];
        }
        const double precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
        const double recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
        const double f1 =
            precision + recall == 0.0 ? 0.0 : 2.0 * precision * recall / (precision + recall);
        rep.per_class_precision.push_back(precision);
        rep.per_class_recall.push_back(recall);
        rep.per_class_f1.push_back(f1);
        rep.macro_precision += precision / n_classes;
        rep.macro_recall += recall / n_classes;
        rep.macro_f1 += f1 / n_classes;
    }
    return rep;
}

std::string EvalReport::to_json() const {
    nlohmann::json j;
    j["accuracy"] = accuracy;
    j["macro_precision"] = macro_precision;
    j["macro_recall"] = macro_recall;
    j["macro_f1"] = macro_f1;
    j["confusion"] = confusion;
    j["per_class"] = {
        {"precision", per_class_precision},
        {"recall", per_class_recall},
        {"f1", per_class_f1},
    };
    return j.dump(2);
}

std::string EvalReport::confusion_text() const {
    std::ostringstream os;
    os << "true\\pred";
    for (int c = 0; c < n_classes; ++c) os << '\t' << c;
    os << '\n';
    for (int r = 0; r < n_classes; ++r) {
        os << r;
        for (int c = 0; c < n_classes; ++c) os << '\t' << confusion[r][c];
        os << '\n';
    }
    return os.str();
}

std::vector<std::pair<std::vector<size_t>, std::vector<size_t>>> kfold_indices(
    size_t n, int k, const std::vector<int>& labels, unsigned seed) {
    if (k < 2) throw ArgumentError("kfold_indices: k must be >= 2");
    if (labels.size() != n) throw ArgumentError("kfold_indices: labels must have length n");

    const int n_classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<size_t>> folds(k);
    for (int c = 0; c < n_classes; ++c) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (labels[i] == c) idx.push_back(i);
        if (idx.empty()) continue;
        if (idx.size() < static_cast<size_t>(k))
            throw ArgumentError("kfold_indices: class " + std::to_string(c) + " has " +
                                std::to_string(idx.size()) + " samples, fewer than k=" +
                                std::to_string(k));
        std::mt19937 rng = seeded_rng(seed, static_cast<unsigned>(c));
        deterministic_shuffle(idx, rng);
        // Round-robin deal keeps per-fold class counts within one sample.
        for (size_t i = 0; i < idx.size(); ++i)
            folds[i % k].push_back(idx[i]);
    }

    std::vector<std::pair<std::vector<size_t>, std::vector<size_t>>> out(k);
    for (int f = 0; f < k; ++f) {
        std::sort(folds[f].begin(), folds[f].end());
        out[f].second = folds[f];
        for (int o = 0; o < k; ++o) {
            if (o == f) continue;
            out[f].first.insert(out[f].first.end(), folds[o].begin(), folds[o].end());
        }
        std::sort(out[f].first.begin(), out[f].first.end());
    }
    return out;
}

}  // namespace fishfresh
