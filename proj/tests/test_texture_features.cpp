#include <doctest.h>

#include <random>

#include "fishfresh/errors.hpp"
#include "fishfresh/texture_features.hpp"
#include "fishfresh_ref.hpp"
#include "support/synthetic.hpp"

using namespace fishfresh;

namespace {

ChannelPlane rotate90_ccw(const ChannelPlane& p) {
    ChannelPlane out(p.height, p.width, 0.0, p.range_lo, p.range_hi);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x)
            out.at(y, p.width - 1 - x) = p.at(x, y);
    return out;
}

}  // namespace

TEST_CASE("glcm: constant plane collapses to one cell") {
    const ChannelPlane plane(16, 16, 42.0);
    const auto feats = glcm_features(plane, 3);
    REQUIRE(feats.size() == 16);
    for (int o = 0; o < 4; ++o) {
        CHECK(feats[0 + o] == doctest::Approx(0.0));   // contrast
        CHECK(feats[4 + o] == doctest::Approx(1.0));   // homogeneity
        CHECK(feats[8 + o] == doctest::Approx(1.0));   // energy
        CHECK(feats[12 + o] == doctest::Approx(1.0));  // correlation (sigma=0 rule)
    }
}

TEST_CASE("glcm: 2x2 checkerboard at d=1, 0 degrees") {
    ChannelPlane plane(2, 2, 0.0);
    plane.at(1, 0) = 255.0;
    plane.at(0, 1) = 255.0;
    const GlcmMatrix m = build_glcm(plane, 1, 0);
    CHECK(m.at(0, 255) == doctest::Approx(0.5));
    CHECK(m.at(255, 0) == doctest::Approx(0.5));
    const auto f = haralick_features(m);
    CHECK(f[0] == doctest::Approx(65025.0));  // 255^2
}

TEST_CASE("glcm: normalization and symmetry") {
    std::mt19937 rng(71);
    const ChannelPlane plane = testsupport::random_plane(12, 12, rng);
    for (int angle : kGlcmOrientations) {
        const GlcmMatrix m = build_glcm(plane, 3, angle);
        double sum = 0.0;
        for (double c : m.cells) sum += c;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        for (int i = 0; i < 256; i += 17)
            for (int j = 0; j < 256; j += 13) REQUIRE(m.at(i, j) == m.at(j, i));
    }
}

TEST_CASE("glcm: matches the exhaustive pair-enumeration reference") {
    std::mt19937 rng(73);
    const int offsets[4][2] = {{3, 0}, {3, -3}, {0, -3}, {-3, -3}};
    for (int trial = 0; trial < 20; ++trial) {
        const ChannelPlane plane = testsupport::random_plane(8, 8, rng);
        const auto feats = glcm_features(plane, 3);
        for (int o = 0; o < 4; ++o) {
            const auto expect = ref::glcm_pair_features(plane, offsets[o][0], offsets[o][1]);
            for (int f = 0; f < 4; ++f)
                REQUIRE(feats[f * 4 + o] == doctest::Approx(expect[f]).epsilon(1e-9));
        }
    }
}

TEST_CASE("glcm: rotating the plane permutes orientation blocks") {
    std::mt19937 rng(79);
    const ChannelPlane plane = testsupport::random_plane(14, 14, rng);
    const auto base = glcm_features(plane, 3);
    const auto rotated = glcm_features(rotate90_ccw(plane), 3);
    // 0 <-> 90 and 45 <-> 135 swap within each feature block of four.
    for (int f = 0; f < 4; ++f) {
        CHECK(base[f * 4 + 0] == doctest::Approx(rotated[f * 4 + 2]).epsilon(1e-9));
        CHECK(base[f * 4 + 2] == doctest::Approx(rotated[f * 4 + 0]).epsilon(1e-9));
        CHECK(base[f * 4 + 1] == doctest::Approx(rotated[f * 4 + 3]).epsilon(1e-9));
        CHECK(base[f * 4 + 3] == doctest::Approx(rotated[f * 4 + 1]).epsilon(1e-9));
    }
}

TEST_CASE("glcm: masked pairs need both endpoints inside") {
    ChannelPlane plane(8, 8, 0.0);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) plane.at(x, y) = (x + y) % 2 == 0 ? 10.0 : 200.0;
    EyeMask mask = EyeMask::disc(8, 8, 3.5, 3.5, 2.8);
    const auto feats = glcm_features(plane, 1, &mask);
    const int offsets[4][2] = {{1, 0}, {1, -1}, {0, -1}, {-1, -1}};
    for (int o = 0; o < 4; ++o) {
        const auto expect = ref::glcm_pair_features(plane, offsets[o][0], offsets[o][1], &mask);
        for (int f = 0; f < 4; ++f)
            REQUIRE(feats[f * 4 + o] == doctest::Approx(expect[f]).epsilon(1e-9));
    }
}

TEST_CASE("glcm: too-small plane raises extraction error") {
    const ChannelPlane tiny(2, 2, 5.0);
    CHECK_THROWS_AS(glcm_features(tiny, 3), ExtractionError);
}

TEST_CASE("glcm: mean/range aggregate emits 8 values") {
    std::mt19937 rng(83);
    const ChannelPlane plane = testsupport::random_plane(10, 10, rng);
    const auto agg = glcm_features(plane, 3, nullptr, GlcmAggregate::MeanRange);
    REQUIRE(agg.size() == 8);
    const auto full = glcm_features(plane, 3);
    // Mean of the contrast block.
    const double mean_contrast = (full[0] + full[1] + full[2] + full[3]) / 4.0;
    CHECK(agg[0] == doctest::Approx(mean_contrast).epsilon(1e-12));
}

TEST_CASE("lbp: constant plane lands every code in bin 8") {
    const ChannelPlane plane(9, 9, 50.0);
    const LbpHistogram h = lbp_riu2(plane);
    CHECK(h.bins[8] == doctest::Approx(1.0));
    double sum = 0.0;
    for (double b : h.bins) sum += b;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lbp: matches the naive enumeration reference exactly") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const ChannelPlane plane = testsupport::random_plane(16, 16, rng);
        const LbpHistogram h = lbp_riu2(plane);
        const auto expect = ref::lbp_histogram(plane);
        for (int b = 0; b < 10; ++b) REQUIRE(h.bins[b] == expect[b]);
    }
}

TEST_CASE("lbp: rotation invariance within interpolation tolerance") {
    std::mt19937 rng(97);
    const ChannelPlane plane = testsupport::random_plane(16, 16, rng);
    const LbpHistogram a = lbp_riu2(plane);
    const LbpHistogram b = lbp_riu2(rotate90_ccw(plane));
    for (int i = 0; i < 10; ++i) CHECK(a.bins[i] == doctest::Approx(b.bins[i]).epsilon(1e-6));
}

TEST_CASE("lbp: masked neighbourhoods and thin masks") {
    std::mt19937 rng(101);
    const ChannelPlane plane = testsupport::random_plane(16, 16, rng);
    EyeMask mask = EyeMask::disc(16, 16, 7.5, 7.5, 5.0);
    const LbpHistogram h = lbp_riu2(plane, &mask);
    const auto expect = ref::lbp_histogram(plane, &mask);
    for (int b = 0; b < 10; ++b) REQUIRE(h.bins[b] == expect[b]);

    // A mask thinner than one full neighbourhood cannot produce any code.
    EyeMask thin = EyeMask::disc(16, 16, 7.5, 7.5, 0.9);
    CHECK_THROWS_AS(lbp_riu2(plane, &thin), ExtractionError);
    CHECK_THROWS_AS(lbp_riu2(ChannelPlane(2, 2, 0.0)), ExtractionError);
}

TEST_CASE("texture names: dimensional contract") {
    CHECK(glcm_feature_names().size() == 16);
    CHECK(lbp_feature_names().size() == 10);
    CHECK(glcm_feature_names()[0] == "glcm_contrast_0");
    CHECK(glcm_feature_names()[15] == "glcm_correlation_135");
    CHECK(lbp_feature_names()[9] == "lbp_riu2_bin9");
}
