#include "fishfresh/classify/standardize.hpp"

#include <cmath>

#include "fishfresh/errors.hpp"

namespace fishfresh {

Scaler fit_scaler(const DataMatrix& train) {
    if (train.rows == 0) throw ArgumentError("fit_scaler: empty training matrix");
    Scaler s;
    s.mean.assign(train.cols, 0.0);
    s.scale.assign(train.cols, 1.0);
    for (size_t c = 0; c < train.cols; ++c) {
        double sum = 0.0;
        for (size_t r = 0; r < train.rows; ++r) sum += train.at(r, c);
        const double mean = sum / static_cast<double>(train.rows);
        double var = 0.0;
        for (size_t r = 0; r < train.rows; ++r) {
            const double d = train.at(r, c) - mean;
            var += d * d;
        }
        var /= static_cast<double>(train.rows);
        if (var > 0.0) {
            s.mean[c] = mean;
            s.scale[c] = std::sqrt(var);
        }
        // Zero-variance columns keep mean 0 / scale 1 and pass through.
    }
    return s;
}

DataMatrix apply_scaler(const Scaler& scaler, const DataMatrix& m) {
    if (m.cols != scaler.mean.size())
        throw ArgumentError("apply_scaler: column count mismatch");
    DataMatrix out = m;
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            out.at(r, c) = (m.at(r, c) - scaler.mean[c]) / scaler.scale[c];
    return out;
}

}  // namespace fishfresh
