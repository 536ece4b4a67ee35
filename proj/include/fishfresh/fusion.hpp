#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fishfresh/color_features.hpp"
#include "fishfresh/colorspace.hpp"
#include "fishfresh/image.hpp"

namespace fishfresh {

enum class Family { CS, CVR, CP, CH, LBP, GLCM };

std::string to_string(Family family);
int family_size(Family family);  // CS=24, CVR=9, CP=15, CH=48, LBP=10, GLCM=16

// One block of a feature set: a descriptor family plus, for the per-space
// families (CS, CP, CH), the color space it reads.
struct FeatureComponent {
    Family family;
    std::optional<ColorSpace> space;  // empty for CVR, LBP, GLCM

    int size() const { return family_size(family); }
    std::vector<std::string> column_names() const;
};

// Immutable definition of one of the seventeen incremental feature sets.
struct FeatureSetSpec {
    std::string id;  // "FS1" .. "FS17"
    std::vector<FeatureComponent> components;
    int dimensionality = 0;
    std::vector<std::string> column_names;
};

// All seventeen specs in numeric order.
const std::vector<FeatureSetSpec>& registry();

// Lookup by id; throws ArgumentError for unknown ids.
const FeatureSetSpec& feature_set(const std::string& id);

bool is_known_feature_set(const std::string& id);

// FS15-FS17 follow the listing and extend FS11. This builds the
// alternative reading (extending FS12 or any other registered set) for
// experimentation; the returned spec carries a composite id such as
// "FS15@FS12" and is not part of the registry.
FeatureSetSpec custom_full_combined(const std::string& base_id, ColorSpace histogram_space);

struct ExtractOptions {
    HistogramNorm hist_norm = HistogramNorm::PerChannel;
    int glcm_distance = 3;
};

// Wall-clock seconds spent per descriptor family (the --timing payload).
using FamilyTimings = std::map<Family, double>;

// Ordered, named, fixed-length feature vector tied to its spec.
struct FeatureVector {
    std::vector<double> values;
    const FeatureSetSpec* spec = nullptr;

    const std::vector<std::string>& names() const { return spec->column_names; }
};

// Concatenates component extractor outputs in spec order. The needed color
// conversions are performed once per call.
FeatureVector extract(const RasterImage& img, const FeatureSetSpec& spec,
                      const EyeMask* mask = nullptr, const ExtractOptions& opts = {},
                      FamilyTimings* timings = nullptr);

}  // namespace fishfresh
