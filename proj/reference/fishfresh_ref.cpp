#include "fishfresh_ref.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace fishfresh::ref {

namespace {

// round(p/q + 1/2) for q > 0 in exact integer arithmetic (p may be negative,
// though the conversions below only produce non-negative values).
long round_rational(long p, long q) {
    if (p >= 0) return (2 * p + q) / (2 * q);
    return -((-2 * p + q) / (2 * q));
}

}  // namespace

std::array<int, 3> hsv_pixel(int b, int g, int r) {
    const int v = std::max(b, std::max(g, r));
    const int lo = std::min(b, std::min(g, r));
    const int delta = v - lo;
    const int s = v == 0 ? 0 : static_cast<int>(round_rational(255L * delta, v));
    int h = 0;
    if (delta != 0) {
        // hue/2 = 30*(x - y)/delta + offset, kept rational until rounding.
        long num, offset;
        if (v == r) {
            num = 30L * (g - b);
            offset = 0;
        } else if (v == g) {
            num = 30L * (b - r);
            offset = 60;
        } else {
            num = 30L * (r - g);
            offset = 120;
        }
        if (num + offset * delta < 0) num += 180L * delta;  // wrap hue into [0,360)
        h = static_cast<int>(round_rational(num + offset * delta, delta));
    }
    return {h, s, v};
}

std::array<int, 3> lab_pixel(int b, int g, int r) {
    const auto linearize = [](int level) -> long double {
        const long double u = level / 255.0L;
        if (u <= 0.04045L) return u / 12.92L;
        return std::pow((u + 0.055L) / 1.055L, 2.4L);
    };
    const long double rl = linearize(r), gl = linearize(g), bl = linearize(b);
    const long double x = (0.4124564L * rl + 0.3575761L * gl + 0.1804375L * bl) / 0.95047L;
    const long double y = 0.2126729L * rl + 0.7151522L * gl + 0.0721750L * bl;
    const long double z = (0.0193339L * rl + 0.1191920L * gl + 0.9503041L * bl) / 1.08883L;
    const auto f = [](long double t) -> long double {
        if (t > 216.0L / 24389.0L) return std::cbrt(t);
        return (24389.0L / 27.0L * t + 16.0L) / 116.0L;
    };
    const long double fx = f(x), fy = f(y), fz = f(z);
    const long double L = 116.0L * fy - 16.0L;
    const long double a = 500.0L * (fx - fy);
    const long double bb = 200.0L * (fy - fz);
    const auto to_level = [](long double v) {
        return static_cast<int>(std::clamp<long>(std::llround(static_cast<double>(v)), 0L, 255L));
    };
    return {to_level(L * 2.55L), to_level(a + 128.0L), to_level(bb + 128.0L)};
}

Moments moments(const std::vector<double>& values) {
    Moments m;
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    m.mean = sum / n;
    double s2 = 0, s3 = 0, s4 = 0, s5 = 0, s6 = 0;
    for (double v : values) {
        const double d = v - m.mean;
        s2 += std::pow(d, 2);
        s3 += std::pow(d, 3);
        s4 += std::pow(d, 4);
        s5 += std::pow(d, 5);
        s6 += std::pow(d, 6);
    }
    const double m2 = s2 / n;
    m.std_dev = std::sqrt(m2);
    if (m2 > 1e-18) {
        m.skewness = (s3 / n) / std::pow(m.std_dev, 3);
        m.kurtosis = (s4 / n) / std::pow(m.std_dev, 4);
        m.moment5 = (s5 / n) / std::pow(m.std_dev, 5);
        m.moment6 = (s6 / n) / std::pow(m.std_dev, 6);
    }
    return m;
}

double variance(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

double percentile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const double rank = q / 100.0 * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<size_t>(std::floor(rank));
    const auto hi = static_cast<size_t>(std::ceil(rank));
    if (lo == hi) return values[lo];
    return values[lo] * (hi - rank) + values[hi] * (rank - lo);
}

double entropy_bits(const std::vector<double>& values) {
    std::array<std::uint64_t, 256> counts{};
    for (double v : values)
        ++counts[std::clamp(static_cast<int>(v), 0, 255)];
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(values.size());
        h -= p * std::log(p);
    }
    return h / std::log(2.0);
}

std::array<std::uint64_t, 16> histogram16(const std::vector<double>& values) {
    std::array<std::uint64_t, 16> counts{};
    for (double v : values)
        ++counts[std::clamp(static_cast<int>(v / 16.0), 0, 15)];
    return counts;
}

double haar_detail_mean(const ChannelPlane& plane) {
    const int ew = plane.width + plane.width % 2;
    const int eh = plane.height + plane.height % 2;
    const auto px = [&](int x, int y) {
        return plane.at(std::min(x, plane.width - 1), std::min(y, plane.height - 1));
    };
    double acc = 0.0;
    std::uint64_t coeffs = 0;
    for (int y = 0; y < eh; y += 2) {
        for (int x = 0; x < ew; x += 2) {
            const double a = px(x, y), b = px(x + 1, y), c = px(x, y + 1), d = px(x + 1, y + 1);
            acc += std::abs((a - b + c - d) / 2.0);
            acc += std::abs((a + b - c - d) / 2.0);
            acc += std::abs((a - b - c + d) / 2.0);
            coeffs += 3;
        }
    }
    return coeffs == 0 ? 0.0 : acc / static_cast<double>(coeffs);
}

std::array<double, 4> glcm_pair_features(const ChannelPlane& plane, int dx, int dy,
                                         const EyeMask* mask) {
    // Explicit symmetric pair list, then features straight off the list.
    std::vector<std::pair<int, int>> pairs;
    for (int y = 0; y < plane.height; ++y) {
        for (int x = 0; x < plane.width; ++x) {
            const int nx = x + dx, ny = y + dy;
            if (nx < 0 || nx >= plane.width || ny < 0 || ny >= plane.height) continue;
            if (!in_scope(mask, x, y) || !in_scope(mask, nx, ny)) continue;
            const int i = static_cast<int>(std::lround(plane.at(x, y)));
            const int j = static_cast<int>(std::lround(plane.at(nx, ny)));
            pairs.emplace_back(i, j);
            pairs.emplace_back(j, i);
        }
    }
    const double n = static_cast<double>(pairs.size());
    double contrast = 0, homogeneity = 0, mu_i = 0, mu_j = 0;
    std::map<std::pair<int, int>, std::uint64_t> cell_counts;
    for (const auto& [i, j] : pairs) {
        contrast += (i - j) * (i - j) / n;
        homogeneity += 1.0 / (1.0 + (i - j) * (i - j)) / n;
        mu_i += i / n;
        mu_j += j / n;
        ++cell_counts[{i, j}];
    }
    double energy = 0;
    for (const auto& [cell, count] : cell_counts) {
        const double p = static_cast<double>(count) / n;
        energy += p * p;
    }
    double var_i = 0, var_j = 0, cov = 0;
    for (const auto& [i, j] : pairs) {
        var_i += (i - mu_i) * (i - mu_i) / n;
        var_j += (j - mu_j) * (j - mu_j) / n;
        cov += (i - mu_i) * (j - mu_j) / n;
    }
    const double correlation =
        (var_i <= 0.0 || var_j <= 0.0) ? 1.0 : cov / (std::sqrt(var_i) * std::sqrt(var_j));
    return {contrast, homogeneity, energy, correlation};
}

namespace {

double bilinear_at(const ChannelPlane& plane, double x, double y) {
    const int x0 = std::clamp(static_cast<int>(std::floor(x)), 0, plane.width - 1);
    const int y0 = std::clamp(static_cast<int>(std::floor(y)), 0, plane.height - 1);
    const int x1 = std::min(x0 + 1, plane.width - 1);
    const int y1 = std::min(y0 + 1, plane.height - 1);
    const double fx = x - x0, fy = y - y0;
    return plane.at(x0, y0) * (1 - fx) * (1 - fy) + plane.at(x1, y0) * fx * (1 - fy) +
           plane.at(x0, y1) * (1 - fx) * fy + plane.at(x1, y1) * fx * fy;
}

int rotations_to_uniform_count(unsigned pattern) {
    // Uniformity via rotation: count transitions by comparing against the
    // single-bit rotated pattern.
    const unsigned rotated = ((pattern << 1) | (pattern >> 7)) & 0xFFu;
    unsigned changed = pattern ^ rotated;
    int transitions = 0;
    while (changed != 0) {
        transitions += static_cast<int>(changed & 1u);
        changed >>= 1;
    }
    return transitions;
}

}  // namespace

std::array<double, 10> lbp_histogram(const ChannelPlane& plane, const EyeMask* mask) {
    std::array<std::uint64_t, 10> counts{};
    std::uint64_t total = 0;
    // Diagonal sample coordinate: sqrt is correctly rounded, so this is the
    // same double the production kernel uses.
    const double s = std::sqrt(0.5);
    const double dxs[8] = {1.0, s, 0.0, -s, -1.0, -s, 0.0, s};
    const double dys[8] = {0.0, -s, -1.0, -s, 0.0, s, 1.0, s};
    for (int y = 1; y < plane.height - 1; ++y) {
        for (int x = 1; x < plane.width - 1; ++x) {
            if (mask != nullptr) {
                bool ok = true;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx)
                        if (!mask->inside(x + dx, y + dy)) ok = false;
                if (!ok) continue;
            }
            unsigned pattern = 0;
            for (int p = 0; p < 8; ++p) {
                if (bilinear_at(plane, x + dxs[p], y + dys[p]) >= plane.at(x, y))
                    pattern |= 1u << p;
            }
            int code;
            if (rotations_to_uniform_count(pattern) <= 2) {
                code = 0;
                for (int p = 0; p < 8; ++p) code += static_cast<int>((pattern >> p) & 1u);
            } else {
                code = 9;
            }
            ++counts[code];
            ++total;
        }
    }
    std::array<double, 10> hist{};
    for (int i = 0; i < 10; ++i)
        hist[i] = total == 0 ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(total);
    return hist;
}

ChannelPlane gaussian_blur_direct(const ChannelPlane& plane, int ksize) {
    const double sigma = 0.3 * ((ksize - 1) / 2.0 - 1.0) + 0.8;
    const int half = ksize / 2;
    std::vector<double> kernel2d(static_cast<size_t>(ksize) * ksize);
    double sum = 0.0;
    for (int ky = 0; ky < ksize; ++ky) {
        for (int kx = 0; kx < ksize; ++kx) {
            const double dx = kx - half, dy = ky - half;
            const double w = std::exp(-(dx * dx) / (2 * sigma * sigma)) *
                             std::exp(-(dy * dy) / (2 * sigma * sigma));
            kernel2d[static_cast<size_t>(ky) * ksize + kx] = w;
            sum += w;
        }
    }
    for (double& w : kernel2d) w /= sum;

    const auto reflect = [](int i, int n) {
        if (n == 1) return 0;
        while (i < 0 || i >= n) {
            if (i < 0) i = -i;
            if (i >= n) i = 2 * (n - 1) - i;
        }
        return i;
    };
    ChannelPlane out(plane.width, plane.height);
    for (int y = 0; y < plane.height; ++y) {
        for (int x = 0; x < plane.width; ++x) {
            double acc = 0.0;
            for (int ky = 0; ky < ksize; ++ky)
                for (int kx = 0; kx < ksize; ++kx)
                    acc += kernel2d[static_cast<size_t>(ky) * ksize + kx] *
                           plane.at(reflect(x + kx - half, plane.width),
                                    reflect(y + ky - half, plane.height));
            out.at(x, y) = acc;
        }
    }
    return out;
}

ChannelPlane grayscale(const RasterImage& img) {
    ChannelPlane out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(x, y) =
                0.299 * img.at(x, y, 2) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 0);
    return out;
}

std::vector<double> gather(const ChannelPlane& plane, const EyeMask* mask) {
    std::vector<double> out;
    out.reserve(plane.pixel_count());
    for (int y = 0; y < plane.height; ++y)
        for (int x = 0; x < plane.width; ++x)
            if (in_scope(mask, x, y)) out.push_back(plane.at(x, y));
    return out;
}

}  // namespace fishfresh::ref
