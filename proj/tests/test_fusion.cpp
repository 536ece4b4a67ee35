#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fishfresh/errors.hpp"
#include "fishfresh/fusion.hpp"
#include "support/synthetic.hpp"

using namespace fishfresh;

TEST_CASE("registry: the seventeen dimensionalities") {
    const std::map<std::string, int> expected = {
        {"FS1", 48},  {"FS2", 48},  {"FS3", 48},  {"FS4", 72},  {"FS5", 57},  {"FS6", 73},
        {"FS7", 83},  {"FS8", 98},  {"FS9", 98},  {"FS10", 98}, {"FS11", 113}, {"FS12", 113},
        {"FS13", 113}, {"FS14", 128}, {"FS15", 161}, {"FS16", 161}, {"FS17", 161}};
    REQUIRE(registry().size() == 17);
    for (const FeatureSetSpec& spec : registry()) {
        REQUIRE(expected.count(spec.id) == 1);
        CHECK(spec.dimensionality == expected.at(spec.id));
        CHECK(spec.column_names.size() == static_cast<size_t>(spec.dimensionality));
        int component_sum = 0;
        for (const FeatureComponent& c : spec.components) component_sum += c.size();
        CHECK(component_sum == spec.dimensionality);
    }
}

TEST_CASE("registry: composition of FS5 and FS17") {
    const FeatureSetSpec& fs5 = feature_set("FS5");
    REQUIRE(fs5.components.size() == 3);
    CHECK(fs5.components[0].family == Family::CS);
    CHECK(*fs5.components[0].space == ColorSpace::BGR);
    CHECK(fs5.components[1].family == Family::CS);
    CHECK(*fs5.components[1].space == ColorSpace::Lab);
    CHECK(fs5.components[2].family == Family::CVR);

    const FeatureSetSpec& fs17 = feature_set("FS17");
    CHECK(fs17.components.back().family == Family::CH);
    CHECK(*fs17.components.back().space == ColorSpace::HSV);
    // FS17 = FS11 + CH(HSV): identical prefix components.
    const FeatureSetSpec& fs11 = feature_set("FS11");
    REQUIRE(fs17.components.size() == fs11.components.size() + 1);
}

TEST_CASE("registry: no two columns share a name") {
    for (const FeatureSetSpec& spec : registry()) {
        std::set<std::string> names(spec.column_names.begin(), spec.column_names.end());
        CHECK(names.size() == spec.column_names.size());
    }
}

TEST_CASE("registry: unknown id raises") {
    CHECK_THROWS_AS(feature_set("FS18"), ArgumentError);
    CHECK(is_known_feature_set("FS17"));
    CHECK_FALSE(is_known_feature_set("fs17"));
}

TEST_CASE("extract: dimensionality and determinism for every registered set") {
    std::mt19937 rng(139);
    const RasterImage img = testsupport::random_image(24, 24, rng);
    for (const FeatureSetSpec& spec : registry()) {
        const FeatureVector v = extract(img, spec);
        REQUIRE(static_cast<int>(v.values.size()) == spec.dimensionality);
        for (double x : v.values) REQUIRE(std::isfinite(x));
        const FeatureVector again = extract(img, spec);
        REQUIRE(v.values == again.values);
    }
}

TEST_CASE("extract: constant gray image only has nonzero means in the CS block") {
    const RasterImage img(16, 16, 128, 128, 128);
    const FeatureVector v = extract(img, feature_set("FS1"));
    for (int i = 0; i < v.spec->dimensionality; ++i) {
        const std::string& name = v.names()[i];
        if (name.ends_with("_mean"))
            continue;  // means carry the constant level
        CHECK_MESSAGE(v.values[i] == 0.0, name);
    }
}

TEST_CASE("extract: prefix consistency across the fusion chains") {
    std::mt19937 rng(149);
    const std::vector<std::pair<std::string, std::string>> chains = {
        {"FS2", "FS5"},  {"FS5", "FS6"},  {"FS6", "FS7"},  {"FS7", "FS11"},
        {"FS11", "FS17"}, {"FS7", "FS14"}, {"FS8", "FS11"}, {"FS11", "FS15"}};
    for (int trial = 0; trial < 3; ++trial) {
        const RasterImage img = testsupport::random_image(20, 20, rng);
        std::map<std::string, FeatureVector> cache;
        for (const auto& [small_id, large_id] : chains) {
            if (!cache.count(small_id)) cache.emplace(small_id, extract(img, feature_set(small_id)));
            if (!cache.count(large_id)) cache.emplace(large_id, extract(img, feature_set(large_id)));
            const FeatureVector& small = cache.at(small_id);
            const FeatureVector& large = cache.at(large_id);
            // Every column of the smaller set appears with an identical
            // value in the larger set.
            std::map<std::string, double> large_by_name;
            for (size_t i = 0; i < large.values.size(); ++i)
                large_by_name[large.names()[i]] = large.values[i];
            for (size_t i = 0; i < small.values.size(); ++i) {
                REQUIRE(large_by_name.count(small.names()[i]) == 1);
                REQUIRE(large_by_name.at(small.names()[i]) == small.values[i]);
            }
        }
    }
}

TEST_CASE("extract: masked extraction propagates to every family") {
    std::mt19937 rng(151);
    const RasterImage img = testsupport::random_image(32, 32, rng);
    const EyeMask mask = EyeMask::disc(32, 32, 15.5, 15.5, 10.0);
    const FeatureVector masked = extract(img, feature_set("FS17"), &mask);
    const FeatureVector full = extract(img, feature_set("FS17"));
    REQUIRE(masked.values.size() == full.values.size());
    CHECK(masked.values != full.values);

    const EyeMask everything = EyeMask::disc(32, 32, 15.5, 15.5, 1000.0);
    const FeatureVector covered = extract(img, feature_set("FS17"), &everything);
    CHECK(covered.values == full.values);
}

TEST_CASE("extract: family timings accumulate when requested") {
    std::mt19937 rng(157);
    const RasterImage img = testsupport::random_image(24, 24, rng);
    FamilyTimings timings;
    extract(img, feature_set("FS17"), nullptr, {}, &timings);
    CHECK(timings.count(Family::CS) == 1);
    CHECK(timings.count(Family::CH) == 1);
    for (const auto& [family, seconds] : timings) CHECK(seconds >= 0.0);
}

TEST_CASE("custom full-combined variant extends FS12") {
    const FeatureSetSpec variant = custom_full_combined("FS12", ColorSpace::HSV);
    CHECK(variant.id == "FS17@FS12");
    CHECK(variant.dimensionality == 161);
    // Percentile block comes from FS12 (BGR+Lab) instead of FS11 (BGR+HSV).
    bool has_lab_percentiles = false;
    for (const std::string& name : variant.column_names)
        if (name.starts_with("cp_lab_")) has_lab_percentiles = true;
    CHECK(has_lab_percentiles);
}
