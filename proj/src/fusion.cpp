#include "fishfresh/fusion.hpp"

#include <cassert>
#include <chrono>

#include "fishfresh/errors.hpp"
#include "fishfresh/texture_features.hpp"

namespace fishfresh {

std::string to_string(Family family) {
    switch (family) {
        case Family::CS: return "CS";
        case Family::CVR: return "CVR";
        case Family::CP: return "CP";
        case Family::CH: return "CH";
        case Family::LBP: return "LBP";
        case Family::GLCM: return "GLCM";
    }
    return "?";
}

int family_size(Family family) {
    switch (family) {
        case Family::CS: return 24;
        case Family::CVR: return 9;
        case Family::CP: return 15;
        case Family::CH: return 48;
        case Family::LBP: return 10;
        case Family::GLCM: return 16;
    }
    return 0;
}

std::vector<std::string> FeatureComponent::column_names() const {
    switch (family) {
        case Family::CS: return color_statistics_names(*space);
        case Family::CP: return color_percentile_names(*space);
        case Family::CH: return color_histogram_names(*space);
        case Family::CVR: {
            const auto arr = color_variance_ratio_names();
            return {arr.begin(), arr.end()};
        }
        case Family::LBP: return lbp_feature_names();
        case Family::GLCM: return glcm_feature_names();
    }
    return {};
}

namespace {

FeatureSetSpec make_spec(std::string id, std::vector<FeatureComponent> components) {
    FeatureSetSpec spec;
    spec.id = std::move(id);
    spec.components = std::move(components);
    for (const FeatureComponent& c : spec.components) {
        spec.dimensionality += c.size();
        const auto names = c.column_names();
        spec.column_names.insert(spec.column_names.end(), names.begin(), names.end());
    }
    assert(static_cast<int>(spec.column_names.size()) == spec.dimensionality);
    return spec;
}

FeatureComponent cs(ColorSpace s) { return {Family::CS, s}; }
FeatureComponent cp(ColorSpace s) { return {Family::CP, s}; }
FeatureComponent ch(ColorSpace s) { return {Family::CH, s}; }

std::vector<FeatureComponent> extend(std::vector<FeatureComponent> base,
                                     const std::vector<FeatureComponent>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

std::vector<FeatureSetSpec> build_registry() {
    using S = ColorSpace;
    const FeatureComponent cvr{Family::CVR, std::nullopt};
    const FeatureComponent glcm{Family::GLCM, std::nullopt};
    const FeatureComponent lbp{Family::LBP, std::nullopt};

    std::vector<FeatureSetSpec> specs;
    specs.push_back(make_spec("FS1", {cs(S::BGR), cs(S::HSV)}));
    specs.push_back(make_spec("FS2", {cs(S::BGR), cs(S::Lab)}));
    specs.push_back(make_spec("FS3", {cs(S::Lab), cs(S::HSV)}));
    specs.push_back(make_spec("FS4", {cs(S::BGR), cs(S::Lab), cs(S::HSV)}));
    specs.push_back(make_spec("FS5", {cs(S::BGR), cs(S::Lab), cvr}));
    specs.push_back(make_spec("FS6", {cs(S::BGR), cs(S::Lab), cvr, glcm}));
    specs.push_back(make_spec("FS7", {cs(S::BGR), cs(S::Lab), cvr, glcm, lbp}));

    const std::vector<FeatureComponent> fs7 = specs.back().components;
    specs.push_back(make_spec("FS8", extend(fs7, {cp(S::BGR)})));
    specs.push_back(make_spec("FS9", extend(fs7, {cp(S::Lab)})));
    specs.push_back(make_spec("FS10", extend(fs7, {cp(S::HSV)})));
    specs.push_back(make_spec("FS11", extend(fs7, {cp(S::BGR), cp(S::HSV)})));
    specs.push_back(make_spec("FS12", extend(fs7, {cp(S::BGR), cp(S::Lab)})));
    specs.push_back(make_spec("FS13", extend(fs7, {cp(S::Lab), cp(S::HSV)})));
    specs.push_back(make_spec("FS14", extend(fs7, {cp(S::BGR), cp(S::Lab), cp(S::HSV)})));

    const std::vector<FeatureComponent> fs11 = specs[10].components;
    specs.push_back(make_spec("FS15", extend(fs11, {ch(S::BGR)})));
    specs.push_back(make_spec("FS16", extend(fs11, {ch(S::Lab)})));
    specs.push_back(make_spec("FS17", extend(fs11, {ch(S::HSV)})));
    return specs;
}

}  // namespace

const std::vector<FeatureSetSpec>& registry() {
    static const std::vector<FeatureSetSpec> specs = build_registry();
    return specs;
}

const FeatureSetSpec& feature_set(const std::string& id) {
    for (const FeatureSetSpec& spec : registry())
        if (spec.id == id) return spec;
    throw ArgumentError("unknown feature set '" + id + "' (expected FS1..FS17)");
}

bool is_known_feature_set(const std::string& id) {
    for (const FeatureSetSpec& spec : registry())
        if (spec.id == id) return true;
    return false;
}

FeatureSetSpec custom_full_combined(const std::string& base_id, ColorSpace histogram_space) {
    const FeatureSetSpec& base = feature_set(base_id);
    FeatureSetSpec spec = make_spec(
        "", extend(base.components, {ch(histogram_space)}));
    // Composite id marks this as a registry variant, e.g. "FS16@FS12".
    int n = 15;
    if (histogram_space == ColorSpace::Lab) n = 16;
    if (histogram_space == ColorSpace::HSV) n = 17;
    spec.id = "FS" + std::to_string(n) + "@" + base_id;
    return spec;
}

namespace {

class ScopedFamilyTimer {
  public:
    ScopedFamilyTimer(FamilyTimings* timings, Family family)
        : timings_(timings), family_(family),
          start_(std::chrono::steady_clock::now()) {}
    ~ScopedFamilyTimer() {
        if (timings_ == nullptr) return;
        const auto end = std::chrono::steady_clock::now();
        (*timings_)[family_] += std::chrono::duration<double>(end - start_).count();
    }

  private:
    FamilyTimings* timings_;
    Family family_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

FeatureVector extract(const RasterImage& img, const FeatureSetSpec& spec, const EyeMask* mask,
                      const ExtractOptions& opts, FamilyTimings* timings) {
    // Work out which conversions this spec needs; CVR reads all three
    // spaces and the texture families read the Lab b* plane.
    bool need_bgr = false, need_hsv = false, need_lab = false;
    for (const FeatureComponent& c : spec.components) {
        if (c.family == Family::CVR) need_bgr = need_hsv = need_lab = true;
        if (c.family == Family::LBP || c.family == Family::GLCM) need_lab = true;
        if (c.space) {
            if (*c.space == ColorSpace::BGR) need_bgr = true;
            if (*c.space == ColorSpace::HSV) need_hsv = true;
            if (*c.space == ColorSpace::Lab) need_lab = true;
        }
    }
    SpacePlanes bgr, hsv, lab;
    if (need_bgr) bgr = to_bgr_planes(img);
    if (need_hsv) hsv = to_hsv(img);
    if (need_lab) lab = to_lab(img);
    const auto planes_of = [&](ColorSpace s) -> const SpacePlanes& {
        switch (s) {
            case ColorSpace::BGR: return bgr;
            case ColorSpace::HSV: return hsv;
            default: return lab;
        }
    };

    FeatureVector fv;
    fv.spec = &spec;
    fv.values.reserve(spec.dimensionality);
    for (const FeatureComponent& c : spec.components) {
        ScopedFamilyTimer timer(timings, c.family);
        switch (c.family) {
            case Family::CS: {
                const auto v = color_statistics(planes_of(*c.space), mask);
                fv.values.insert(fv.values.end(), v.begin(), v.end());
                break;
            }
            case Family::CVR: {
                const auto v = color_variance_ratios(bgr, hsv, lab, mask);
                fv.values.insert(fv.values.end(), v.begin(), v.end());
                break;
            }
            case Family::CP: {
                const auto v = color_percentiles(planes_of(*c.space), mask);
                fv.values.insert(fv.values.end(), v.begin(), v.end());
                break;
            }
            case Family::CH: {
                const auto v = color_histogram(planes_of(*c.space), mask, opts.hist_norm);
                fv.values.insert(fv.values.end(), v.begin(), v.end());
                break;
            }
            case Family::GLCM: {
                const auto v = glcm_features(lab.channels[2], opts.glcm_distance, mask);
                fv.values.insert(fv.values.end(), v.begin(), v.end());
                break;
            }
            case Family::LBP: {
                const LbpHistogram h = lbp_riu2(lab.channels[2], mask);
                fv.values.insert(fv.values.end(), h.bins.begin(), h.bins.end());
                break;
            }
        }
    }
    if (static_cast<int>(fv.values.size()) != spec.dimensionality)
        throw std::logic_error("extract: dimensionality mismatch for " + spec.id);
    return fv;
}

}  // namespace fishfresh
