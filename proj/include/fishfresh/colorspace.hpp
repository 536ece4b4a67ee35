#pragma once

#include <array>
#include <string>

#include "fishfresh/image.hpp"

namespace fishfresh {

enum class ColorSpace { BGR, HSV, Lab };

std::string to_string(ColorSpace space);

// Per-space channel letters used in canonical feature names
// (BGR -> b,g,r; HSV -> h,s,v; Lab -> l,a,b).
std::array<std::string, 3> channel_names(ColorSpace space);

// A color space's three channel planes in declared order.
struct SpacePlanes {
    ColorSpace space = ColorSpace::BGR;
    std::array<ChannelPlane, 3> channels;
};

// Identity split of the BGR raster into three [0,255] planes.
SpacePlanes to_bgr_planes(const RasterImage& img);

// 8-bit scaled HSV: H in [0,180] (degrees halved), S and V in [0,255].
// Zero-saturation pixels get H = 0. Values are rounded half away from
// zero to the nearest integer level and stored as reals.
SpacePlanes to_hsv(const RasterImage& img);

// 8-bit scaled CIELAB via sRGB EOTF -> linear RGB -> XYZ (D65) -> L*a*b*,
// then L*255/100, a+128, b+128, rounded and clamped to [0,255].
SpacePlanes to_lab(const RasterImage& img);

// Scalar conversions for one pixel; the plane functions above apply these
// per pixel. Inputs are 8-bit B,G,R.
std::array<int, 3> bgr_pixel_to_hsv(int b, int g, int r);
std::array<int, 3> bgr_pixel_to_lab(int b, int g, int r);

// Rec.601 luma: 0.299R + 0.587G + 0.114B, kept real-valued in [0,255].
ChannelPlane to_grayscale(const RasterImage& img);

}  // namespace fishfresh
