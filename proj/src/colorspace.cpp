#include "fishfresh/colorspace.hpp"

#include <algorithm>
#include <cmath>

namespace fishfresh {

std::string to_string(ColorSpace space) {
    switch (space) {
        case ColorSpace::BGR: return "bgr";
        case ColorSpace::HSV: return "hsv";
        case ColorSpace::Lab: return "lab";
    }
    return "?";
}

std::array<std::string, 3> channel_names(ColorSpace space) {
    switch (space) {
        case ColorSpace::BGR: return {"b", "g", "r"};
        case ColorSpace::HSV: return {"h", "s", "v"};
        case ColorSpace::Lab: return {"l", "a", "b"};
    }
    return {"?", "?", "?"};
}

SpacePlanes to_bgr_planes(const RasterImage& img) {
    SpacePlanes out;
    out.space = ColorSpace::BGR;
    for (int c = 0; c < 3; ++c) out.channels[c] = extract_channel(img, c);
    return out;
}

std::array<int, 3> bgr_pixel_to_hsv(int b, int g, int r) {
    const int v = std::max({b, g, r});
    const int lo = std::min({b, g, r});
    const int delta = v - lo;
    int s8 = 0;
    if (v > 0) s8 = static_cast<int>(std::lround(255.0 * delta / v));
    int h8 = 0;
    if (delta > 0) {
        double hue;  // degrees in [0, 360)
        if (v == r)
            hue = 60.0 * (g - b) / delta;
        else if (v == g)
            hue = 120.0 + 60.0 * (b - r) / delta;
        else
            hue = 240.0 + 60.0 * (r - g) / delta;
        if (hue < 0.0) hue += 360.0;
        h8 = static_cast<int>(std::lround(hue / 2.0));
    }
    return {h8, s8, v};
}

namespace {

inline double srgb_to_linear(int level) {
    const double u = level / 255.0;
    return u <= 0.04045 ? u / 12.92 : std::pow((u + 0.055) / 1.055, 2.4);
}

inline double lab_f(double t) {
    constexpr double eps = 216.0 / 24389.0;    // (6/29)^3
    constexpr double kappa = 24389.0 / 27.0;   // (29/3)^3
    return t > eps ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

inline int clamp_level(long v) { return static_cast<int>(std::clamp(v, 0L, 255L)); }

}  // namespace

std::array<int, 3> bgr_pixel_to_lab(int b, int g, int r) {
    const double rl = srgb_to_linear(r);
    const double gl = srgb_to_linear(g);
    const double bl = srgb_to_linear(b);
    // sRGB D65 primaries.
    const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
    const double fx = lab_f(x / 0.95047);
    const double fy = lab_f(y / 1.0);
    const double fz = lab_f(z / 1.08883);
    const double L = 116.0 * fy - 16.0;
    const double a = 500.0 * (fx - fy);
    const double bb = 200.0 * (fy - fz);
    return {clamp_level(std::lround(L * 255.0 / 100.0)),
            clamp_level(std::lround(a + 128.0)),
            clamp_level(std::lround(bb + 128.0))};
}

namespace {

template <typename PixelFn>
SpacePlanes convert_per_pixel(const RasterImage& img, ColorSpace space, double h_hi,
                              PixelFn&& fn) {
    SpacePlanes out;
    out.space = space;
    for (int c = 0; c < 3; ++c)
        out.channels[c] = ChannelPlane(img.width, img.height, 0.0, 0.0, 255.0);
    out.channels[0].range_hi = h_hi;
    #pragma omp parallel for
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const auto px = fn(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
            out.channels[0].at(x, y) = px[0];
            out.channels[1].at(x, y) = px[1];
            out.channels[2].at(x, y) = px[2];
        }
    }
    return out;
}

}  // namespace

SpacePlanes to_hsv(const RasterImage& img) {
    return convert_per_pixel(img, ColorSpace::HSV, 180.0, bgr_pixel_to_hsv);
}

SpacePlanes to_lab(const RasterImage& img) {
    return convert_per_pixel(img, ColorSpace::Lab, 255.0, bgr_pixel_to_lab);
}

ChannelPlane to_grayscale(const RasterImage& img) {
    ChannelPlane p(img.width, img.height, 0.0, 0.0, 255.0);
    #pragma omp parallel for
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            p.at(x, y) = 0.299 * img.at(x, y, 2) + 0.587 * img.at(x, y, 1) +
                         0.114 * img.at(x, y, 0);
    return p;
}

}  // namespace fishfresh
