#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fishfresh {

// Dense row-major matrix of reals; the common currency between feature
// extraction, CSV I/O and the classifiers.
struct DataMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> data;

    DataMatrix() = default;
    DataMatrix(size_t r, size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(size_t r, size_t c) { return data[r * cols + c]; }
    double at(size_t r, size_t c) const { return data[r * cols + c]; }

    std::span<const double> row(size_t r) const { return {data.data() + r * cols, cols}; }
    std::span<double> row(size_t r) { return {data.data() + r * cols, cols}; }

    void append_row(std::span<const double> values) {
        data.insert(data.end(), values.begin(), values.end());
        ++rows;
    }
};

}  // namespace fishfresh
