#pragma once

// Serial reference implementations used as independent oracles by the test
// suites and as the baseline side of the benchmark. Everything here is
// written as plain direct loops; none of it shares code with the production
// kernels in src/.

#include <array>
#include <cstdint>
#include <vector>

#include "fishfresh/image.hpp"

namespace fishfresh::ref {

// Exact 8-bit HSV conversion in integer/rational arithmetic
// (round half away from zero done on exact rationals).
std::array<int, 3> hsv_pixel(int b, int g, int r);

// Scalar CIELAB conversion in long double precision.
std::array<int, 3> lab_pixel(int b, int g, int r);

struct Moments {
    double mean = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double moment5 = 0.0;
    double moment6 = 0.0;
};

// Direct-summation central moments of the given values (population sigma;
// sigma = 0 yields zero standardized moments).
Moments moments(const std::vector<double>& values);

// Population variance by direct two-pass summation.
double variance(const std::vector<double>& values);

// Percentile q (0..100) by full sort and linear rank interpolation.
double percentile(std::vector<double> values, double q);

// Shannon entropy in bits over 256 unit-width bins of [0,256).
double entropy_bits(const std::vector<double>& values);

// Naive per-pixel 16-bin counts over [0,256).
std::array<std::uint64_t, 16> histogram16(const std::vector<double>& values);

// Mean absolute one-level Haar detail coefficient (trailing row/column
// duplicated for odd sizes).
double haar_detail_mean(const ChannelPlane& plane);

// Brute-force GLCM features from an explicit symmetric pair list:
// [contrast, homogeneity, energy, correlation].
std::array<double, 4> glcm_pair_features(const ChannelPlane& plane, int dx, int dy,
                                         const EyeMask* mask = nullptr);

// Naive riu2 LBP histogram: per-pixel code enumeration with a rotation
// look-up built from scratch.
std::array<double, 10> lbp_histogram(const ChannelPlane& plane, const EyeMask* mask = nullptr);

// Direct (non-separable) 2-D convolution with an explicit Gaussian kernel
// and reflect-101 borders.
ChannelPlane gaussian_blur_direct(const ChannelPlane& plane, int ksize);

// Rec.601 grayscale, plain loop.
ChannelPlane grayscale(const RasterImage& img);

// In-scope values of a plane in row-major order.
std::vector<double> gather(const ChannelPlane& plane, const EyeMask* mask = nullptr);

}  // namespace fishfresh::ref
