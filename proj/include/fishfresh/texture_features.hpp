#pragma once

#include <array>
#include <string>
#include <vector>

#include "fishfresh/image.hpp"

namespace fishfresh {

// Gray-level co-occurrence matrix for one orientation: 256 levels,
// symmetric accumulation, cells normalized to sum 1.
struct GlcmMatrix {
    int levels = 256;
    int distance = 3;
    int orientation_deg = 0;  // one of 0, 45, 90, 135
    std::vector<double> cells;  // levels x levels, row-major

    double at(int i, int j) const { return cells[static_cast<size_t>(i) * levels + j]; }
};

inline constexpr std::array<int, 4> kGlcmOrientations = {0, 45, 90, 135};

// Builds the normalized symmetric GLCM of integer-quantized plane values
// for one orientation. Pairs with either endpoint out of scope are skipped.
GlcmMatrix build_glcm(const ChannelPlane& plane, int distance, int orientation_deg,
                      const EyeMask* mask = nullptr);

// Haralick descriptors of one normalized GLCM:
// contrast, homogeneity, energy, correlation (zero variance -> 1).
std::array<double, 4> haralick_features(const GlcmMatrix& glcm);

enum class GlcmAggregate {
    PerOrientation,  // 4 features x 4 orientations = 16 values
    MeanRange,       // mean and range per feature over orientations = 8 values
};

// GLCM texture vector of the given plane. The default per-orientation
// layout is feature-major then orientation; MeanRange is available for
// experimentation and is not part of any registered feature set.
std::vector<double> glcm_features(const ChannelPlane& plane, int distance = 3,
                                  const EyeMask* mask = nullptr,
                                  GlcmAggregate aggregate = GlcmAggregate::PerOrientation);

// Rotation-invariant uniform LBP histogram, P=8 samples at radius 1,
// diagonal samples bilinearly interpolated, 10 bins, L1-normalized.
struct LbpHistogram {
    std::array<double, 10> bins{};
};

LbpHistogram lbp_riu2(const ChannelPlane& plane, const EyeMask* mask = nullptr);

// riu2 code for one interior pixel (exposed for the per-pixel oracle tests).
int lbp_riu2_code(const ChannelPlane& plane, int x, int y);

std::vector<std::string> glcm_feature_names();
std::vector<std::string> lbp_feature_names();

}  // namespace fishfresh
