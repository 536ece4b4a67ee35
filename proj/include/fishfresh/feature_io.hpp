#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fishfresh/dataset.hpp"
#include "fishfresh/fusion.hpp"
#include "fishfresh/matrix.hpp"

namespace fishfresh {

struct FeatureRow {
    std::string sample_id;
    FeatureVector features;
    FreshnessLabel label;
};

// CSV with header = canonical feature names + "label"; one row per input in
// input order; values written with enough digits to round-trip at 9
// significant figures. Rows whose feature set differs from `spec` raise
// SchemaError.
void write_feature_matrix(const FeatureSetSpec& spec, const std::vector<FeatureRow>& rows,
                          const std::filesystem::path& out);

struct FeatureMatrix {
    std::vector<std::string> names;  // feature columns, label excluded
    DataMatrix X;
    std::vector<int> labels;  // encoded 0,1,2
};

FeatureMatrix read_feature_matrix(const std::filesystem::path& path);

}  // namespace fishfresh
