#pragma once

#include <vector>

#include "fishfresh/matrix.hpp"

namespace fishfresh {

// Per-column z-score fitted on training rows only. Zero-variance columns
// pass through unchanged (mean 0, scale 1).
struct Scaler {
    std::vector<double> mean;
    std::vector<double> scale;
};

Scaler fit_scaler(const DataMatrix& train);
DataMatrix apply_scaler(const Scaler& scaler, const DataMatrix& m);

}  // namespace fishfresh
