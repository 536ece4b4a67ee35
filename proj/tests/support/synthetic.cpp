#include "synthetic.hpp"

#include <algorithm>
#include <cmath>

namespace fishfresh::testsupport {

ChannelPlane random_plane(int width, int height, std::mt19937& rng) {
    ChannelPlane p(width, height, 0.0, 0.0, 255.0);
    for (double& v : p.values) v = static_cast<double>(rng() % 256);
    return p;
}

RasterImage random_image(int width, int height, std::mt19937& rng) {
    RasterImage img(width, height);
    for (std::uint8_t& b : img.data) b = static_cast<std::uint8_t>(rng() % 256);
    return img;
}

RasterImage disc_image(const DiscImageOptions& opts, std::mt19937& rng) {
    RasterImage img(opts.width, opts.height,
                    static_cast<std::uint8_t>(opts.background_level),
                    static_cast<std::uint8_t>(opts.background_level),
                    static_cast<std::uint8_t>(opts.background_level));
    const double cx = (opts.width - 1) / 2.0;
    const double cy = (opts.height - 1) / 2.0;
    for (int y = 0; y < opts.height; ++y) {
        for (int x = 0; x < opts.width; ++x) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= opts.radius * opts.radius) {
                const auto v = static_cast<std::uint8_t>(opts.disc_level);
                img.set_pixel(x, y, v, v, v);
            }
        }
    }
    for (int b = 0; b < opts.n_specular_blobs; ++b) {
        // Blobs stay well inside the disc so they land on scan rays.
        const double ang = (rng() % 360) * std::numbers::pi / 180.0;
        const double dist = 0.3 * opts.radius + (rng() % 100) / 100.0 * 0.4 * opts.radius;
        const double bx = cx + dist * std::cos(ang);
        const double by = cy + dist * std::sin(ang);
        for (int y = 0; y < opts.height; ++y) {
            for (int x = 0; x < opts.width; ++x) {
                const double dx = x - bx, dy = y - by;
                if (dx * dx + dy * dy <= opts.blob_radius * opts.blob_radius)
                    img.set_pixel(x, y, 255, 255, 255);
            }
        }
    }
    return img;
}

RasterImage class_disc_image(int class_id, int width, int height, std::mt19937& rng) {
    // Base disc colors (BGR): reddish-brown, yellow-green, blue-gray.
    static const int base[3][3] = {{45, 55, 150}, {45, 140, 150}, {150, 95, 45}};
    // Cloudiness: smooth random blotches whose amplitude grows with class.
    const double cloud_amp = 6.0 + 14.0 * class_id;

    struct Wave {
        double kx, ky, phase, amp;
    };
    std::vector<Wave> waves(4);
    for (Wave& w : waves) {
        w.kx = 0.05 + (rng() % 100) / 100.0 * 0.20;
        w.ky = 0.05 + (rng() % 100) / 100.0 * 0.20;
        w.phase = (rng() % 628) / 100.0;
        w.amp = cloud_amp * (0.5 + (rng() % 100) / 200.0);
    }

    RasterImage img(width, height, 210, 210, 210);
    const double cx = (width - 1) / 2.0;
    const double cy = (height - 1) / 2.0;
    const double radius = 0.30 * std::min(width, height) + (rng() % 100) / 100.0 * 3.0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy > radius * radius) {
                // Slight background shimmer so no channel is constant.
                const int n = static_cast<int>(rng() % 7) - 3;
                for (int c = 0; c < 3; ++c)
                    img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(210 + n, 0, 255));
                continue;
            }
            double cloud = 0.0;
            for (const Wave& w : waves)
                cloud += w.amp * std::sin(w.kx * x + w.phase) * std::cos(w.ky * y);
            for (int c = 0; c < 3; ++c) {
                const int noise = static_cast<int>(rng() % 11) - 5;
                const int v = base[class_id][c] + static_cast<int>(cloud) + noise;
                img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
            }
        }
    }
    return img;
}

}  // namespace fishfresh::testsupport
