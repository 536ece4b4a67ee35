#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fishfresh {

// Confusion matrix (rows = true class, columns = predicted) plus accuracy
// and macro-averaged precision/recall/F1. A class absent from both truth
// and prediction contributes zero to each macro term.
struct EvalReport {
    int n_classes = 3;
    std::vector<std::vector<long>> confusion;
    double accuracy = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    std::vector<double> per_class_precision;
    std::vector<double> per_class_recall;
    std::vector<double> per_class_f1;

    std::string to_json() const;
    std::string confusion_text() const;  // plain-text table for the CLI
};

EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred,
                    int n_classes = 3);

// Stratified k-fold: folds partition [0,n), per-fold class proportions stay
// within one sample of the global proportions, deterministic in seed.
std::vector<std::pair<std::vector<size_t>, std::vector<size_t>>> kfold_indices(
    size_t n, int k, const std::vector<int>& labels, unsigned seed);

}  // namespace fishfresh
