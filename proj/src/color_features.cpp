#include "fishfresh/color_features.hpp"

#include <algorithm>
#include <cmath>

#include "fishfresh/errors.hpp"

namespace fishfresh {

namespace {

// Row-partial reductions keep results bit-identical for any thread count:
// each row is summed serially by one thread, rows are then reduced in
// fixed order.
struct RowSums {
    std::vector<double> sum;
    std::vector<size_t> count;
};

RowSums row_sums(const ChannelPlane& plane, const EyeMask* mask) {
    RowSums rs;
    rs.sum.assign(plane.height, 0.0);
    rs.count.assign(plane.height, 0);
    #pragma omp parallel for
    for (int y = 0; y < plane.height; ++y) {
        double s = 0.0;
        size_t n = 0;
        for (int x = 0; x < plane.width; ++x) {
            if (!in_scope(mask, x, y)) continue;
            s += plane.at(x, y);
            ++n;
        }
        rs.sum[y] = s;
        rs.count[y] = n;
    }
    return rs;
}

size_t in_scope_count(const RowSums& rs) {
    size_t n = 0;
    for (size_t c : rs.count) n += c;
    return n;
}

// Central power sums around a fixed mean, rows reduced in order.
std::array<double, 5> central_power_sums(const ChannelPlane& plane, const EyeMask* mask,
                                         double mean) {
    std::vector<std::array<double, 5>> rows(plane.height, {0, 0, 0, 0, 0});
    #pragma omp parallel for
    for (int y = 0; y < plane.height; ++y) {
        std::array<double, 5> acc = {0, 0, 0, 0, 0};
        for (int x = 0; x < plane.width; ++x) {
            if (!in_scope(mask, x, y)) continue;
            const double d = plane.at(x, y) - mean;
            const double d2 = d * d;
            const double d3 = d2 * d;
            acc[0] += d2;
            acc[1] += d3;
            acc[2] += d2 * d2;
            acc[3] += d2 * d3;
            acc[4] += d3 * d3;
        }
        rows[y] = acc;
    }
    std::array<double, 5> total = {0, 0, 0, 0, 0};
    for (const auto& r : rows)
        for (int k = 0; k < 5; ++k) total[k] += r[k];
    return total;
}

std::array<size_t, 256> level_counts(const ChannelPlane& plane, const EyeMask* mask) {
    std::array<size_t, 256> counts{};
    #pragma omp parallel
    {
        std::array<size_t, 256> local{};
        #pragma omp for nowait
        for (int y = 0; y < plane.height; ++y) {
            for (int x = 0; x < plane.width; ++x) {
                if (!in_scope(mask, x, y)) continue;
                const int bin = std::clamp(static_cast<int>(std::floor(plane.at(x, y))), 0, 255);
                ++local[bin];
            }
        }
        #pragma omp critical
        for (int i = 0; i < 256; ++i) counts[i] += local[i];
    }
    return counts;
}

double shannon_entropy_bits(const std::array<size_t, 256>& counts, size_t total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (size_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    // A single occupied bin gives -1*log2(1) = -0.0; normalize the sign.
    return h == 0.0 ? 0.0 : h;
}

// Mean absolute detail coefficient of a one-level 2-D Haar transform.
// Odd dimensions duplicate the trailing row/column; a 2x2 block contributes
// only when all four source pixels are in scope.
double haar_detail_moment(const ChannelPlane& plane, const EyeMask* mask) {
    const int bw = (plane.width + 1) / 2;
    const int bh = (plane.height + 1) / 2;
    std::vector<double> row_abs(bh, 0.0);
    std::vector<size_t> row_blocks(bh, 0);
    #pragma omp parallel for
    for (int by = 0; by < bh; ++by) {
        double acc = 0.0;
        size_t blocks = 0;
        const int y0 = 2 * by;
        const int y1 = std::min(y0 + 1, plane.height - 1);
        for (int bx = 0; bx < bw; ++bx) {
            const int x0 = 2 * bx;
            const int x1 = std::min(x0 + 1, plane.width - 1);
            if (mask != nullptr &&
                !(mask->inside(x0, y0) && mask->inside(x1, y0) && mask->inside(x0, y1) &&
                  mask->inside(x1, y1)))
                continue;
            const double a = plane.at(x0, y0);
            const double b = plane.at(x1, y0);
            const double c = plane.at(x0, y1);
            const double d = plane.at(x1, y1);
            const double lh = (a - b + c - d) * 0.5;
            const double hl = (a + b - c - d) * 0.5;
            const double hh = (a - b - c + d) * 0.5;
            acc += std::abs(lh) + std::abs(hl) + std::abs(hh);
            ++blocks;
        }
        row_abs[by] = acc;
        row_blocks[by] = blocks;
    }
    double total = 0.0;
    size_t blocks = 0;
    for (int by = 0; by < bh; ++by) {
        total += row_abs[by];
        blocks += row_blocks[by];
    }
    return blocks == 0 ? 0.0 : total / (3.0 * static_cast<double>(blocks));
}

}  // namespace

const std::array<std::string, 8>& ChannelStats::stat_names() {
    static const std::array<std::string, 8> names = {
        "mean", "std", "skewness", "kurtosis", "entropy", "wavelet", "m5", "m6"};
    return names;
}

ChannelStats channel_statistics(const ChannelPlane& plane, const EyeMask* mask) {
    const RowSums rs = row_sums(plane, mask);
    const size_t n = in_scope_count(rs);
    if (n == 0) throw ExtractionError("channel_statistics: no pixels in scope");

    ChannelStats st;
    double sum = 0.0;
    for (double s : rs.sum) sum += s;
    st.mean = sum / static_cast<double>(n);

    const auto m = central_power_sums(plane, mask, st.mean);
    const double m2 = m[0] / n;
    const double m3 = m[1] / n;
    const double m4 = m[2] / n;
    const double m5 = m[3] / n;
    const double m6 = m[4] / n;
    st.std_dev = std::sqrt(m2);
    if (m2 > 1e-18) {
        const double s2 = m2;
        const double s3 = s2 * st.std_dev;
        st.skewness = m3 / s3;
        st.kurtosis = m4 / (s2 * s2);
        st.moment5 = m5 / (s2 * s3);
        st.moment6 = m6 / (s2 * s2 * s2);
    }
    st.entropy = shannon_entropy_bits(level_counts(plane, mask), n);
    st.wavelet_moment = haar_detail_moment(plane, mask);
    return st;
}

std::vector<double> color_statistics(const SpacePlanes& planes, const EyeMask* mask) {
    std::vector<double> out;
    out.reserve(24);
    for (const ChannelPlane& ch : planes.channels) {
        const auto arr = channel_statistics(ch, mask).to_array();
        out.insert(out.end(), arr.begin(), arr.end());
    }
    return out;
}

double plane_variance(const ChannelPlane& plane, const EyeMask* mask) {
    const RowSums rs = row_sums(plane, mask);
    const size_t n = in_scope_count(rs);
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (double s : rs.sum) sum += s;
    const double mean = sum / static_cast<double>(n);
    return central_power_sums(plane, mask, mean)[0] / static_cast<double>(n);
}

std::array<double, 9> color_variance_ratios(const SpacePlanes& bgr, const SpacePlanes& hsv,
                                            const SpacePlanes& lab, const EyeMask* mask) {
    // BGR planes are ordered B,G,R; ratios are defined on R,G,B.
    const double vr = plane_variance(bgr.channels[2], mask);
    const double vg = plane_variance(bgr.channels[1], mask);
    const double vb = plane_variance(bgr.channels[0], mask);
    const double vh = plane_variance(hsv.channels[0], mask);
    const double vs = plane_variance(hsv.channels[1], mask);
    const double vv = plane_variance(hsv.channels[2], mask);
    const double vl = plane_variance(lab.channels[0], mask);
    const double va = plane_variance(lab.channels[1], mask);
    const double vbb = plane_variance(lab.channels[2], mask);
    const auto ratio = [](double num, double den) { return num / (den + kVarianceRatioEpsilon); };
    return {ratio(vr, vg), ratio(vr, vb), ratio(vg, vb),
            ratio(vh, vs), ratio(vh, vv), ratio(vs, vv),
            ratio(vl, va), ratio(vl, vbb), ratio(va, vbb)};
}

std::array<double, 9> color_variance_ratios(const RasterImage& img, const EyeMask* mask) {
    return color_variance_ratios(to_bgr_planes(img), to_hsv(img), to_lab(img), mask);
}

double percentile_sorted(const std::vector<double>& sorted, int q) {
    const size_t n = sorted.size();
    const double rank = (q / 100.0) * static_cast<double>(n - 1);
    const size_t lo = static_cast<size_t>(std::floor(rank));
    const size_t hi = std::min(lo + 1, n - 1);
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

namespace {

std::vector<double> gather_in_scope(const ChannelPlane& plane, const EyeMask* mask) {
    std::vector<double> vals;
    vals.reserve(plane.pixel_count());
    for (int y = 0; y < plane.height; ++y)
        for (int x = 0; x < plane.width; ++x)
            if (in_scope(mask, x, y)) vals.push_back(plane.at(x, y));
    return vals;
}

}  // namespace

std::vector<double> color_percentiles(const SpacePlanes& planes, const EyeMask* mask) {
    std::vector<double> out;
    out.reserve(15);
    for (const ChannelPlane& ch : planes.channels) {
        std::vector<double> vals = gather_in_scope(ch, mask);
        if (vals.empty()) throw ExtractionError("color_percentiles: no pixels in scope");
        std::sort(vals.begin(), vals.end());
        for (int q : kPercentileLevels) out.push_back(percentile_sorted(vals, q));
    }
    return out;
}

std::array<size_t, 16> histogram_counts(const ChannelPlane& plane, const EyeMask* mask) {
    std::array<size_t, 16> counts{};
    #pragma omp parallel
    {
        std::array<size_t, 16> local{};
        #pragma omp for nowait
        for (int y = 0; y < plane.height; ++y) {
            for (int x = 0; x < plane.width; ++x) {
                if (!in_scope(mask, x, y)) continue;
                const int bin =
                    std::clamp(static_cast<int>(std::floor(plane.at(x, y) / 16.0)), 0, 15);
                ++local[bin];
            }
        }
        #pragma omp critical
        for (int i = 0; i < 16; ++i) counts[i] += local[i];
    }
    return counts;
}

std::vector<double> color_histogram(const SpacePlanes& planes, const EyeMask* mask,
                                    HistogramNorm norm) {
    std::vector<double> out;
    out.reserve(48);
    for (const ChannelPlane& ch : planes.channels) {
        const auto counts = histogram_counts(ch, mask);
        size_t total = 0;
        for (size_t c : counts) total += c;
        if (total == 0) throw ExtractionError("color_histogram: no pixels in scope");
        double norm2 = 0.0;
        for (size_t c : counts) norm2 += static_cast<double>(c) * static_cast<double>(c);
        const double inv = norm == HistogramNorm::PerChannel ? 1.0 / std::sqrt(norm2) : 1.0;
        for (size_t c : counts) out.push_back(static_cast<double>(c) * inv);
    }
    if (norm == HistogramNorm::Joint) {
        double norm2 = 0.0;
        for (double v : out) norm2 += v * v;
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : out) v *= inv;
    }
    return out;
}

std::vector<std::string> color_statistics_names(ColorSpace space) {
    std::vector<std::string> names;
    names.reserve(24);
    const auto chans = channel_names(space);
    const std::string prefix = "cs_" + to_string(space) + "_";
    for (const auto& ch : chans)
        for (const auto& stat : ChannelStats::stat_names())
            names.push_back(prefix + ch + "_" + stat);
    return names;
}

std::array<std::string, 9> color_variance_ratio_names() {
    return {"cvr_r_g", "cvr_r_b", "cvr_g_b", "cvr_h_s", "cvr_h_v",
            "cvr_s_v", "cvr_l_a", "cvr_l_b", "cvr_a_b"};
}

std::vector<std::string> color_percentile_names(ColorSpace space) {
    std::vector<std::string> names;
    names.reserve(15);
    const auto chans = channel_names(space);
    const std::string prefix = "cp_" + to_string(space) + "_";
    for (const auto& ch : chans)
        for (int q : kPercentileLevels)
            names.push_back(prefix + ch + "_p" + std::to_string(q));
    return names;
}

std::vector<std::string> color_histogram_names(ColorSpace space) {
    std::vector<std::string> names;
    names.reserve(48);
    const auto chans = channel_names(space);
    const std::string prefix = "ch_" + to_string(space) + "_";
    for (const auto& ch : chans)
        for (int i = 0; i < 16; ++i)
            names.push_back(prefix + ch + "_bin" + std::to_string(i));
    return names;
}

}  // namespace fishfresh
