#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fishfresh {

// Decoded 3-channel 8-bit image. Channel order is BGR (the decode
// convention); pixels are interleaved row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // size = width * height * 3, B,G,R interleaved

    RasterImage() = default;
    RasterImage(int w, int h, std::uint8_t fill_b = 0, std::uint8_t fill_g = 0,
                std::uint8_t fill_r = 0);

    bool valid() const { return width >= 1 && height >= 1 &&
                                data.size() == static_cast<size_t>(width) * height * 3; }

    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * 3 + c];
    }

    void set_pixel(int x, int y, std::uint8_t b, std::uint8_t g, std::uint8_t r) {
        at(x, y, 0) = b;
        at(x, y, 1) = g;
        at(x, y, 2) = r;
    }
};

// Single-channel 2-D array of real values with a declared value range.
// Planes produced by the color conversions hold integer levels stored as
// doubles; downstream code treats them as reals.
struct ChannelPlane {
    int width = 0;
    int height = 0;
    double range_lo = 0.0;
    double range_hi = 255.0;
    std::vector<double> values;  // row-major

    ChannelPlane() = default;
    ChannelPlane(int w, int h, double fill = 0.0, double lo = 0.0, double hi = 255.0);

    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    // Bilinear sample at real coordinates; (x, y) must lie within
    // [0, width-1] x [0, height-1].
    double sample_bilinear(double x, double y) const;
};

// Binary disc mask with analytic center/radius metadata. The bitmap is
// true exactly where (px-cx)^2 + (py-cy)^2 <= radius^2.
struct EyeMask {
    int width = 0;
    int height = 0;
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 0.0;
    std::vector<std::uint8_t> bitmap;  // 0/1, row-major

    static EyeMask disc(int width, int height, double cx, double cy, double radius);

    bool inside(int x, int y) const {
        return bitmap[static_cast<size_t>(y) * width + x] != 0;
    }
    size_t count_inside() const;
};

// All-true helper used by extractors when no mask is given.
inline bool in_scope(const EyeMask* mask, int x, int y) {
    return mask == nullptr || mask->inside(x, y);
}

// Splits an image into its three 8-bit planes (channel c of the BGR layout).
ChannelPlane extract_channel(const RasterImage& img, int channel);

// Bilinear resize; used by the optional CLI --resize flag.
RasterImage resize_bilinear(const RasterImage& img, int new_width, int new_height);

}  // namespace fishfresh
