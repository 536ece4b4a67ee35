#include "fishfresh/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "fishfresh/errors.hpp"
#include "fishfresh/imageio.hpp"
#include "fishfresh/rng.hpp"

namespace fs = std::filesystem;

namespace fishfresh {

std::string to_string(FreshnessLabel label) {
    switch (label) {
        case FreshnessLabel::HighlyFresh: return "highly_fresh";
        case FreshnessLabel::Fresh: return "fresh";
        case FreshnessLabel::NotFresh: return "not_fresh";
    }
    return "?";
}

FreshnessLabel label_from_index(int index) {
    if (index < 0 || index >= kNumClasses)
        throw ArgumentError("label index out of range: " + std::to_string(index));
    return static_cast<FreshnessLabel>(index);
}

std::string to_string(Split split) {
    switch (split) {
        case Split::Unassigned: return "unassigned";
        case Split::Train: return "train";
        case Split::Val: return "val";
        case Split::Test: return "test";
    }
    return "?";
}

namespace {

FreshnessLabel label_from_name(const std::string& name) {
    for (int i = 0; i < kNumClasses; ++i)
        if (to_string(label_from_index(i)) == name) return label_from_index(i);
    throw ConfigError("unknown class name '" + name +
                      "' (expected highly_fresh, fresh or not_fresh)");
}

Split split_from_name(const std::string& name) {
    for (Split s : {Split::Unassigned, Split::Train, Split::Val, Split::Test})
        if (to_string(s) == name) return s;
    throw SchemaError("unknown split name '" + name + "'");
}

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".jpg" || ext == ".jpeg" || ext == ".png" || ext == ".bmp";
}

}  // namespace

DatasetLayout layout_from_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open layout file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("layout file " + path.string() + ": " + e.what());
    }
    DatasetLayout layout;
    layout.class_dirs.clear();
    for (const auto& [dir, cls] : j.items())
        layout.class_dirs[dir] = label_from_name(cls.get<std::string>());
    if (layout.class_dirs.empty())
        throw ConfigError("layout file " + path.string() + " maps no directories");
    return layout;
}

Dataset ingest(const fs::path& root, const DatasetLayout& layout) {
    if (!fs::is_directory(root)) throw ConfigError("dataset root is not a directory: " + root.string());

    Dataset ds;
    for (int i = 0; i < kNumClasses; ++i) ds.class_counts[label_from_index(i)] = 0;

    std::vector<std::pair<fs::path, FreshnessLabel>> files;
    for (const auto& [dir_name, label] : layout.class_dirs) {
        const fs::path class_dir = root / dir_name;
        if (!fs::is_directory(class_dir))
            throw ConfigError("missing class directory: " + class_dir.string());
        // Species subfolders are flattened under each freshness directory.
        for (const auto& entry : fs::recursive_directory_iterator(class_dir))
            if (entry.is_regular_file() && has_image_extension(entry.path()))
                files.emplace_back(entry.path(), label);
    }
    // Lexicographic path ordering keeps the sample list independent of
    // directory-walk and decode-thread order.
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.first.string() < b.first.string(); });

    std::vector<int> decode_ok(files.size(), 1);
    std::vector<std::string> decode_err(files.size());
    if (layout.validate_decode) {
        #pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < files.size(); ++i) {
            std::string err;
            if (!decode_image(files[i].first, &err)) {
                decode_ok[i] = 0;
                decode_err[i] = err;
            }
        }
    }

    for (size_t i = 0; i < files.size(); ++i) {
        if (decode_ok[i]) {
            ds.samples.push_back({files[i].first, files[i].second, Split::Unassigned});
            ++ds.class_counts[files[i].second];
        } else {
            ds.rejected.emplace_back(files[i].first, decode_err[i]);
        }
    }

    for (const auto& [dir_name, label] : layout.class_dirs) {
        if (ds.class_counts[label] == 0)
            throw DatasetError("class '" + to_string(label) + "' has no images under " +
                               (root / dir_name).string());
    }
    return ds;
}

Dataset stratified_split(const Dataset& ds, double test_frac, double val_frac, unsigned seed) {
    if (!(test_frac > 0.0 && test_frac < 1.0))
        throw ArgumentError("test_frac must be in (0,1)");
    if (!(val_frac >= 0.0 && val_frac < 1.0))
        throw ArgumentError("val_frac must be in [0,1)");

    Dataset out = ds;
    out.seed = seed;
    for (int c = 0; c < kNumClasses; ++c) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < out.samples.size(); ++i)
            if (out.samples[i].label == label_from_index(c)) idx.push_back(i);
        if (idx.empty())
            throw ArgumentError("stratified_split: class " + to_string(label_from_index(c)) +
                                " has no samples");
        // Per-class stream keyed by (seed, class) so the assignment is a
        // pure function of sample ordering and seed.
        std::mt19937 rng = seeded_rng(seed, static_cast<unsigned>(c));
        deterministic_shuffle(idx, rng);

        const size_t n_test = static_cast<size_t>(std::floor(test_frac * idx.size()));
        const size_t remaining = idx.size() - n_test;
        const size_t n_val = static_cast<size_t>(std::floor(val_frac * remaining));
        for (size_t k = 0; k < idx.size(); ++k) {
            Split s = Split::Train;
            if (k < n_test)
                s = Split::Test;
            else if (k < n_test + n_val)
                s = Split::Val;
            out.samples[idx[k]].split = s;
        }
    }
    return out;
}

std::string sample_id(const LabeledSample& sample, const fs::path& root) {
    const fs::path rel = fs::relative(sample.image_path, root);
    if (rel.empty() || rel.string().starts_with("..")) return sample.image_path.string();
    return rel.generic_string();
}

void write_split_manifest(const Dataset& ds, const fs::path& root, const fs::path& out) {
    nlohmann::json j = nlohmann::json::object();
    for (const LabeledSample& s : ds.samples) j[sample_id(s, root)] = to_string(s.split);
    std::ofstream f(out);
    if (!f) throw IoError("cannot write split manifest: " + out.string());
    f << j.dump(2) << "\n";
}

std::map<std::string, Split> read_split_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open split manifest: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("split manifest " + path.string() + ": " + e.what());
    }
    std::map<std::string, Split> m;
    for (const auto& [k, v] : j.items()) m[k] = split_from_name(v.get<std::string>());
    return m;
}

}  // namespace fishfresh
