#include "fishfresh/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fishfresh/colorspace.hpp"
#include "fishfresh/errors.hpp"

namespace fishfresh {

double gaussian_sigma_for_kernel(int ksize) {
    return 0.3 * ((ksize - 1) / 2.0 - 1.0) + 0.8;
}

namespace {

std::vector<double> gaussian_kernel_1d(int ksize) {
    const double sigma = gaussian_sigma_for_kernel(ksize);
    const int half = ksize / 2;
    std::vector<double> k(ksize);
    double sum = 0.0;
    for (int i = 0; i < ksize; ++i) {
        const double d = i - half;
        k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += k[i];
    }
    for (double& v : k) v /= sum;
    return k;
}

// Reflect-101 border: mirror about the edge pixel without repeating it.
inline int reflect_index(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * (n - 1) - i;
    }
    return i;
}

}  // namespace

ChannelPlane segmentation_preprocess(const RasterImage& img, const SegmentationParams& params) {
    const ChannelPlane gray = to_grayscale(img);
    const std::vector<double> kernel = gaussian_kernel_1d(params.gaussian_kernel);
    const int half = params.gaussian_kernel / 2;

    // Separable convolution: rows then columns.
    ChannelPlane tmp(gray.width, gray.height);
    #pragma omp parallel for
    for (int y = 0; y < gray.height; ++y) {
        for (int x = 0; x < gray.width; ++x) {
            double acc = 0.0;
            for (int k = -half; k <= half; ++k)
                acc += kernel[k + half] * gray.at(reflect_index(x + k, gray.width), y);
            tmp.at(x, y) = acc;
        }
    }
    ChannelPlane out(gray.width, gray.height);
    #pragma omp parallel for
    for (int y = 0; y < gray.height; ++y) {
        for (int x = 0; x < gray.width; ++x) {
            double acc = 0.0;
            for (int k = -half; k <= half; ++k)
                acc += kernel[k + half] * tmp.at(x, reflect_index(y + k, gray.height));
            out.at(x, y) = acc;
        }
    }
    return out;
}

std::vector<RadialProfile> scan_boundary(const ChannelPlane& plane, int n_rays,
                                         const SegmentationParams& params) {
    if (plane.width < 32 || plane.height < 32)
        throw SegmentationError("scan_boundary: plane must be at least 32x32");

    const double cx = (plane.width - 1) / 2.0;
    const double cy = (plane.height - 1) / 2.0;
    const double m = std::min(plane.width, plane.height);
    const double r_min = params.r_min_frac * m;
    const double r_max = params.r_max_frac * m;
    const int n_samples = static_cast<int>(std::floor(r_max - r_min)) + 1;

    std::vector<RadialProfile> profiles(n_rays);
    #pragma omp parallel for
    for (int ray = 0; ray < n_rays; ++ray) {
        RadialProfile& prof = profiles[ray];
        prof.angle_deg = 360.0 * ray / n_rays;
        prof.r_start = r_min;
        const double theta = prof.angle_deg * std::numbers::pi / 180.0;
        const double ux = std::cos(theta);
        const double uy = -std::sin(theta);
        prof.samples.resize(n_samples);
        for (int i = 0; i < n_samples; ++i) {
            const double r = r_min + i;
            prof.samples[i] = plane.sample_bilinear(cx + r * ux, cy + r * uy);
        }
        // Steepest outward rise: the eye is dark against brighter
        // surroundings, so the boundary is the largest forward increase.
        double best = 0.0;
        int best_i = -1;
        for (int i = 0; i + 1 < n_samples; ++i) {
            const double diff = prof.samples[i + 1] - prof.samples[i];
            if (diff > best) {
                best = diff;
                best_i = i;
            }
        }
        if (best_i >= 0) prof.candidate_radius = r_min + best_i + 0.5;
    }
    return profiles;
}

namespace {

double median_inplace(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double estimate_radius(const std::vector<RadialProfile>& profiles,
                       const SegmentationParams& params) {
    std::vector<double> candidates;
    candidates.reserve(profiles.size());
    for (const RadialProfile& p : profiles)
        if (p.candidate_radius) candidates.push_back(*p.candidate_radius);

    if (static_cast<int>(candidates.size()) < params.min_candidates)
        throw SegmentationError("estimate_radius: only " + std::to_string(candidates.size()) +
                                " rays carry boundary candidates (need " +
                                std::to_string(params.min_candidates) + ")");

    std::vector<double> sorted = candidates;
    const double med = median_inplace(sorted);
    std::vector<double> deviations;
    deviations.reserve(candidates.size());
    for (double c : candidates) deviations.push_back(std::abs(c - med));
    const double mad = median_inplace(deviations);

    std::vector<double> survivors;
    survivors.reserve(candidates.size());
    for (double c : candidates)
        if (std::abs(c - med) <= params.mad_multiplier * mad) survivors.push_back(c);

    return median_inplace(survivors) * params.radius_adjustment;
}

RasterImage apply_mask(const RasterImage& img, const EyeMask& mask) {
    RasterImage out(img.width, img.height);
    #pragma omp parallel for
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (mask.inside(x, y))
                for (int c = 0; c < 3; ++c) out.at(x, y, c) = img.at(x, y, c);
        }
    }
    return out;
}

SegmentationResult segment(const RasterImage& img, const SegmentationParams& params) {
    const ChannelPlane smooth = segmentation_preprocess(img, params);
    const std::vector<RadialProfile> profiles = scan_boundary(smooth, params.n_rays, params);

    // Re-run the MAD filter here to report how many candidates survived.
    std::vector<double> candidates;
    for (const RadialProfile& p : profiles)
        if (p.candidate_radius) candidates.push_back(*p.candidate_radius);
    const double radius = estimate_radius(profiles, params);

    std::vector<double> sorted = candidates;
    const double med = median_inplace(sorted);
    std::vector<double> deviations;
    for (double c : candidates) deviations.push_back(std::abs(c - med));
    const double mad = median_inplace(deviations);
    int kept = 0;
    for (double c : candidates)
        if (std::abs(c - med) <= params.mad_multiplier * mad) ++kept;

    SegmentationResult result;
    result.raw_radius = radius / params.radius_adjustment;
    result.candidates_kept = kept;
    const double cx = (img.width - 1) / 2.0;
    const double cy = (img.height - 1) / 2.0;
    result.mask = EyeMask::disc(img.width, img.height, cx, cy, radius);
    result.masked = apply_mask(img, result.mask);
    return result;
}

}  // namespace fishfresh
