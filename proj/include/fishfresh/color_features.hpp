#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fishfresh/colorspace.hpp"
#include "fishfresh/image.hpp"

namespace fishfresh {

// Eight per-channel distribution descriptors. Standardized moments use the
// population sigma; sigma = 0 maps every standardized moment to 0 so
// vectors stay finite on constant input.
struct ChannelStats {
    double mean = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;   // m4 / sigma^4, not excess
    double entropy = 0.0;    // bits over the 256-level histogram
    double wavelet_moment = 0.0;
    double moment5 = 0.0;
    double moment6 = 0.0;

    std::array<double, 8> to_array() const {
        return {mean, std_dev, skewness, kurtosis, entropy, wavelet_moment, moment5, moment6};
    }
    static const std::array<std::string, 8>& stat_names();
};

ChannelStats channel_statistics(const ChannelPlane& plane, const EyeMask* mask = nullptr);

// 24 values: the 8 statistics per channel, channels in declared space order.
std::vector<double> color_statistics(const SpacePlanes& planes, const EyeMask* mask = nullptr);

// Population variance over in-scope pixels (0 when fewer than one pixel).
double plane_variance(const ChannelPlane& plane, const EyeMask* mask = nullptr);

// Nine variance quotients in fixed order
// [R/G, R/B, G/B, H/S, H/V, S/V, L/a, L/b, a/b], each var_num/(var_den + eps).
inline constexpr double kVarianceRatioEpsilon = 1e-12;
std::array<double, 9> color_variance_ratios(const SpacePlanes& bgr, const SpacePlanes& hsv,
                                            const SpacePlanes& lab,
                                            const EyeMask* mask = nullptr);
std::array<double, 9> color_variance_ratios(const RasterImage& img,
                                            const EyeMask* mask = nullptr);

// 15 values: percentiles {5,25,50,75,95} per channel, channel-major,
// linear interpolation between closest ranks.
inline constexpr std::array<int, 5> kPercentileLevels = {5, 25, 50, 75, 95};
std::vector<double> color_percentiles(const SpacePlanes& planes, const EyeMask* mask = nullptr);

// Raw 16-bin counts over [0,256) for one plane (bin width 16).
std::array<size_t, 16> histogram_counts(const ChannelPlane& plane, const EyeMask* mask = nullptr);

enum class HistogramNorm {
    PerChannel,  // each channel's 16-bin histogram scaled to unit L2 norm
    Joint,       // the concatenated 48-vector scaled to unit L2 norm
};

// 48 values: three 16-bin histograms, L2-normalized then concatenated.
std::vector<double> color_histogram(const SpacePlanes& planes, const EyeMask* mask = nullptr,
                                    HistogramNorm norm = HistogramNorm::PerChannel);

// Canonical column names (the CSV contract).
std::vector<std::string> color_statistics_names(ColorSpace space);
std::array<std::string, 9> color_variance_ratio_names();
std::vector<std::string> color_percentile_names(ColorSpace space);
std::vector<std::string> color_histogram_names(ColorSpace space);

// Percentile by linear interpolation between closest ranks on sorted data.
double percentile_sorted(const std::vector<double>& sorted, int q);

}  // namespace fishfresh
