#include "fishfresh/texture_features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "fishfresh/errors.hpp"

namespace fishfresh {

namespace {

struct Offset {
    int dx;
    int dy;
};

// Orientation convention: 0 deg points east, angles grow counterclockwise
// with y pointing down, so 90 deg pairs a pixel with the one d rows above.
Offset orientation_offset(int orientation_deg, int distance) {
    switch (orientation_deg) {
        case 0: return {distance, 0};
        case 45: return {distance, -distance};
        case 90: return {0, -distance};
        case 135: return {-distance, -distance};
        default:
            throw ArgumentError("glcm: unsupported orientation " +
                                std::to_string(orientation_deg));
    }
}

inline int quantize_level(double v) {
    return std::clamp(static_cast<int>(std::lround(v)), 0, 255);
}

}  // namespace

GlcmMatrix build_glcm(const ChannelPlane& plane, int distance, int orientation_deg,
                      const EyeMask* mask) {
    if (distance < 1) throw ArgumentError("glcm: distance must be >= 1");
    const Offset off = orientation_offset(orientation_deg, distance);
    const int levels = 256;

    GlcmMatrix glcm;
    glcm.levels = levels;
    glcm.distance = distance;
    glcm.orientation_deg = orientation_deg;

    // Integer counts first; the merge order of integer additions cannot
    // change the result, so row-parallel accumulation stays deterministic.
    std::vector<std::uint64_t> counts(static_cast<size_t>(levels) * levels, 0);
    std::uint64_t total = 0;
    #pragma omp parallel reduction(+ : total)
    {
        std::vector<std::uint64_t> local(static_cast<size_t>(levels) * levels, 0);
        std::uint64_t local_total = 0;
        #pragma omp for nowait
        for (int y = 0; y < plane.height; ++y) {
            const int ny = y + off.dy;
            if (ny < 0 || ny >= plane.height) continue;
            for (int x = 0; x < plane.width; ++x) {
                const int nx = x + off.dx;
                if (nx < 0 || nx >= plane.width) continue;
                if (!in_scope(mask, x, y) || !in_scope(mask, nx, ny)) continue;
                const int i = quantize_level(plane.at(x, y));
                const int j = quantize_level(plane.at(nx, ny));
                ++local[static_cast<size_t>(i) * levels + j];
                ++local[static_cast<size_t>(j) * levels + i];
                local_total += 2;
            }
        }
        #pragma omp critical
        for (size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
        total += local_total;
    }

    if (total == 0)
        throw ExtractionError("glcm: no valid pixel pair at orientation " +
                              std::to_string(orientation_deg));

    glcm.cells.resize(counts.size());
    const double inv = 1.0 / static_cast<double>(total);
    for (size_t k = 0; k < counts.size(); ++k)
        glcm.cells[k] = static_cast<double>(counts[k]) * inv;
    return glcm;
}

std::array<double, 4> haralick_features(const GlcmMatrix& glcm) {
    const int n = glcm.levels;
    double contrast = 0.0, homogeneity = 0.0, energy = 0.0;
    double mu_i = 0.0, mu_j = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double p = glcm.at(i, j);
            if (p == 0.0) {
                continue;
            }
            const double d = static_cast<double>(i - j);
            contrast += p * d * d;
            homogeneity += p / (1.0 + d * d);
            energy += p * p;
            mu_i += p * i;
            mu_j += p * j;
        }
    }
    double var_i = 0.0, var_j = 0.0, cov = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double p = glcm.at(i, j);
            if (p == 0.0) continue;
            var_i += p * (i - mu_i) * (i - mu_i);
            var_j += p * (j - mu_j) * (j - mu_j);
            cov += p * (i - mu_i) * (j - mu_j);
        }
    }
    // A constant region is perfectly self-correlated.
    const double correlation =
        (var_i <= 0.0 || var_j <= 0.0) ? 1.0 : cov / std::sqrt(var_i * var_j);
    return {contrast, homogeneity, energy, correlation};
}

std::vector<double> glcm_features(const ChannelPlane& plane, int distance, const EyeMask* mask,
                                  GlcmAggregate aggregate) {
    std::array<std::array<double, 4>, 4> per_orientation{};
    // Orientations are independent; ordering of the output is fixed below.
    #pragma omp parallel for
    for (size_t o = 0; o < kGlcmOrientations.size(); ++o) {
        const GlcmMatrix glcm = build_glcm(plane, distance, kGlcmOrientations[o], mask);
        per_orientation[o] = haralick_features(glcm);
    }

    std::vector<double> out;
    if (aggregate == GlcmAggregate::PerOrientation) {
        out.reserve(16);
        for (int f = 0; f < 4; ++f)
            for (size_t o = 0; o < kGlcmOrientations.size(); ++o)
                out.push_back(per_orientation[o][f]);
    } else {
        out.reserve(8);
        for (int f = 0; f < 4; ++f) {
            double lo = per_orientation[0][f], hi = per_orientation[0][f], sum = 0.0;
            for (size_t o = 0; o < kGlcmOrientations.size(); ++o) {
                lo = std::min(lo, per_orientation[o][f]);
                hi = std::max(hi, per_orientation[o][f]);
                sum += per_orientation[o][f];
            }
            out.push_back(sum / 4.0);
            out.push_back(hi - lo);
        }
    }
    return out;
}

namespace {

// Sample positions of the P=8, R=1 circle. Axial neighbors land on exact
// pixels; diagonals sit at sqrt(1/2), which IEEE sqrt makes reproducible
// bit for bit, and are bilinearly interpolated.
const std::array<std::array<double, 2>, 8>& lbp_offsets() {
    static const std::array<std::array<double, 2>, 8> offsets = [] {
        const double s = std::sqrt(0.5);
        return std::array<std::array<double, 2>, 8>{{
            {1.0, 0.0},
            {s, -s},
            {0.0, -1.0},
            {-s, -s},
            {-1.0, 0.0},
            {-s, s},
            {0.0, 1.0},
            {s, s},
        }};
    }();
    return offsets;
}

}  // namespace

int lbp_riu2_code(const ChannelPlane& plane, int x, int y) {
    const double center = plane.at(x, y);
    const auto& offsets = lbp_offsets();
    unsigned pattern = 0;
    for (int p = 0; p < 8; ++p) {
        const double v = plane.sample_bilinear(x + offsets[p][0], y + offsets[p][1]);
        if (v >= center) pattern |= 1u << p;
    }
    int transitions = 0;
    int ones = 0;
    for (int p = 0; p < 8; ++p) {
        const unsigned bit = (pattern >> p) & 1u;
        const unsigned next = (pattern >> ((p + 1) % 8)) & 1u;
        if (bit != next) ++transitions;
        ones += static_cast<int>(bit);
    }
    return transitions <= 2 ? ones : 9;
}

LbpHistogram lbp_riu2(const ChannelPlane& plane, const EyeMask* mask) {
    if (plane.width < 3 || plane.height < 3)
        throw ExtractionError("lbp: plane must be at least 3x3");

    std::array<std::uint64_t, 10> counts{};
    std::uint64_t total = 0;
    #pragma omp parallel reduction(+ : total)
    {
        std::array<std::uint64_t, 10> local{};
        std::uint64_t local_total = 0;
        #pragma omp for nowait
        for (int y = 1; y < plane.height - 1; ++y) {
            for (int x = 1; x < plane.width - 1; ++x) {
                if (mask != nullptr) {
                    // The full 3x3 neighborhood must be in scope: it is the
                    // bilinear support of all eight samples.
                    bool ok = true;
                    for (int dy = -1; dy <= 1 && ok; ++dy)
                        for (int dx = -1; dx <= 1; ++dx)
                            if (!mask->inside(x + dx, y + dy)) {
                                ok = false;
                                break;
                            }
                    if (!ok) continue;
                }
                ++local[lbp_riu2_code(plane, x, y)];
                ++local_total;
            }
        }
        #pragma omp critical
        for (int i = 0; i < 10; ++i) counts[i] += local[i];
        total += local_total;
    }

    if (total == 0) throw ExtractionError("lbp: no pixel with a full in-scope neighborhood");

    LbpHistogram hist;
    for (int i = 0; i < 10; ++i)
        hist.bins[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    return hist;
}

std::vector<std::string> glcm_feature_names() {
    static const std::array<std::string, 4> feats = {"contrast", "homogeneity", "energy",
                                                     "correlation"};
    std::vector<std::string> names;
    names.reserve(16);
    for (const auto& f : feats)
        for (int angle : kGlcmOrientations)
            names.push_back("glcm_" + f + "_" + std::to_string(angle));
    return names;
}

std::vector<std::string> lbp_feature_names() {
    std::vector<std::string> names;
    names.reserve(10);
    for (int i = 0; i < 10; ++i) names.push_back("lbp_riu2_bin" + std::to_string(i));
    return names;
}

}  // namespace fishfresh
