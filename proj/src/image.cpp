#include "fishfresh/image.hpp"

#include <algorithm>
#include <cmath>

namespace fishfresh {

RasterImage::RasterImage(int w, int h, std::uint8_t fill_b, std::uint8_t fill_g,
                         std::uint8_t fill_r)
    : width(w), height(h), data(static_cast<size_t>(w) * h * 3) {
    for (size_t i = 0; i < data.size(); i += 3) {
        data[i] = fill_b;
        data[i + 1] = fill_g;
        data[i + 2] = fill_r;
    }
}

ChannelPlane::ChannelPlane(int w, int h, double fill, double lo, double hi)
    : width(w), height(h), range_lo(lo), range_hi(hi),
      values(static_cast<size_t>(w) * h, fill) {}

double ChannelPlane::sample_bilinear(double x, double y) const {
    const int x0 = std::clamp(static_cast<int>(std::floor(x)), 0, width - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(y)), 0, height - 1);
    const int x1 = std::min(x0 + 1, width - 1);
    const int y1 = std::min(y0 + 1, height - 1);
    const double fx = x - x0;
    const double fy = y - y0;
    return (1.0 - fx) * (1.0 - fy) * at(x0, y0) + fx * (1.0 - fy) * at(x1, y0) +
           (1.0 - fx) * fy * at(x0, y1) + fx * fy * at(x1, y1);
}

EyeMask EyeMask::disc(int width, int height, double cx, double cy, double radius) {
    EyeMask m;
    m.width = width;
    m.height = height;
    m.center_x = cx;
    m.center_y = cy;
    m.radius = radius;
    m.bitmap.assign(static_cast<size_t>(width) * height, 0);
    const double r2 = radius * radius;
    #pragma omp parallel for
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            if (dx * dx + dy * dy <= r2)
                m.bitmap[static_cast<size_t>(y) * width + x] = 1;
        }
    }
    return m;
}

size_t EyeMask::count_inside() const {
    size_t n = 0;
    for (std::uint8_t v : bitmap) n += v;
    return n;
}

ChannelPlane extract_channel(const RasterImage& img, int channel) {
    ChannelPlane p(img.width, img.height, 0.0, 0.0, 255.0);
    #pragma omp parallel for
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            p.at(x, y) = static_cast<double>(img.at(x, y, channel));
    return p;
}

RasterImage resize_bilinear(const RasterImage& img, int new_width, int new_height) {
    RasterImage out(new_width, new_height);
    const double sx = static_cast<double>(img.width) / new_width;
    const double sy = static_cast<double>(img.height) / new_height;
    #pragma omp parallel for
    for (int y = 0; y < new_height; ++y) {
        for (int x = 0; x < new_width; ++x) {
            // Pixel-center mapping.
            const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width - 1.0);
            const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height - 1.0);
            const int x0 = static_cast<int>(std::floor(fx));
            const int y0 = static_cast<int>(std::floor(fy));
            const int x1 = std::min(x0 + 1, img.width - 1);
            const int y1 = std::min(y0 + 1, img.height - 1);
            const double ax = fx - x0;
            const double ay = fy - y0;
            for (int c = 0; c < 3; ++c) {
                const double v = (1 - ax) * (1 - ay) * img.at(x0, y0, c) +
                                 ax * (1 - ay) * img.at(x1, y0, c) +
                                 (1 - ax) * ay * img.at(x0, y1, c) +
                                 ax * ay * img.at(x1, y1, c);
                out.at(x, y, c) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

}  // namespace fishfresh
