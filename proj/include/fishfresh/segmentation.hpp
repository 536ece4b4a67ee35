#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fishfresh/image.hpp"

namespace fishfresh {

// One radial intensity scan line. Samples run from the scan's inner radius
// outward at 1-pixel steps; candidate_radius marks the steepest outward
// rise in intensity (dark eye to brighter surroundings) when one exists.
struct RadialProfile {
    double angle_deg = 0.0;
    double r_start = 0.0;  // radius of samples[0]
    std::vector<double> samples;
    std::optional<double> candidate_radius;
};

struct SegmentationParams {
    int gaussian_kernel = 7;
    int n_rays = 360;
    double r_min_frac = 0.05;   // of min(width, height)
    double r_max_frac = 0.48;
    double mad_multiplier = 3.0;
    double radius_adjustment = 1.05;  // coverage margin applied after estimation
    int min_candidates = 8;
};

// Grayscale + 7x7 Gaussian blur (sigma from the kernel-size rule
// 0.3*((k-1)/2 - 1) + 0.8), reflect-101 borders.
ChannelPlane segmentation_preprocess(const RasterImage& img,
                                     const SegmentationParams& params = {});

// Rays uniformly spaced over 360 degrees from the image center (the grid
// midpoint), sampled with bilinear interpolation.
std::vector<RadialProfile> scan_boundary(const ChannelPlane& plane, int n_rays = 360,
                                         const SegmentationParams& params = {});

// Median of candidates after 3*MAD outlier rejection, scaled by the
// coverage adjustment. Throws SegmentationError when fewer than
// params.min_candidates rays carry candidates.
double estimate_radius(const std::vector<RadialProfile>& profiles,
                       const SegmentationParams& params = {});

struct SegmentationResult {
    EyeMask mask;
    RasterImage masked;      // input inside the disc, black outside
    double raw_radius = 0.0; // estimate before the coverage adjustment
    int candidates_kept = 0; // survivors of the MAD filter
};

SegmentationResult segment(const RasterImage& img, const SegmentationParams& params = {});

// Applies a mask: pixels outside become black. Exposed so masking is
// idempotent and reusable by the CLI.
RasterImage apply_mask(const RasterImage& img, const EyeMask& mask);

// Gaussian kernel-size to sigma rule shared with the reference oracle tests.
double gaussian_sigma_for_kernel(int ksize);

}  // namespace fishfresh
