#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fishfresh {

// Three pooled freshness classes. The total order gives the stable CSV
// encoding 0, 1, 2.
enum class FreshnessLabel { HighlyFresh = 0, Fresh = 1, NotFresh = 2 };

inline constexpr int kNumClasses = 3;

std::string to_string(FreshnessLabel label);
FreshnessLabel label_from_index(int index);

enum class Split { Unassigned, Train, Val, Test };

std::string to_string(Split split);

struct LabeledSample {
    std::filesystem::path image_path;
    FreshnessLabel label = FreshnessLabel::HighlyFresh;
    Split split = Split::Unassigned;
};

struct Dataset {
    std::vector<LabeledSample> samples;  // lexicographic by path within each class scan
    std::map<FreshnessLabel, size_t> class_counts;
    unsigned seed = 0;  // set by stratified_split
    // Files that exist under a class directory but do not decode; reported,
    // never silently dropped.
    std::vector<std::pair<std::filesystem::path, std::string>> rejected;
};

// Directory-name mapping: which subdirectory of the root holds which class.
// Species subfolders below each class directory are flattened.
struct DatasetLayout {
    std::map<std::string, FreshnessLabel> class_dirs = {
        {"highly_fresh", FreshnessLabel::HighlyFresh},
        {"fresh", FreshnessLabel::Fresh},
        {"not_fresh", FreshnessLabel::NotFresh},
    };
    // When true, every image is decoded during ingestion to confirm it
    // yields a 3-channel raster (undecodable ones land in `rejected`).
    bool validate_decode = true;
};

// Loads a JSON map {"dir_name": "highly_fresh"|"fresh"|"not_fresh"}.
DatasetLayout layout_from_json_file(const std::filesystem::path& path);

// Scans <root>/<class_dir>/**/*.{jpg,jpeg,png,bmp} into a labeled dataset.
// Throws ConfigError when a class directory is missing and DatasetError when
// a class ends up with zero images.
Dataset ingest(const std::filesystem::path& root, const DatasetLayout& layout = {});

// Deterministic stratified split: per class, floor(test_frac * n) samples go
// to test, then floor(val_frac * remaining) to val, remainder to train. The
// shuffle is a pure function of (sample ordering, seed).
Dataset stratified_split(const Dataset& ds, double test_frac, double val_frac, unsigned seed);

// Split manifest {sample_id -> split}; sample ids are image paths relative
// to the dataset root (or absolute when not under the root).
void write_split_manifest(const Dataset& ds, const std::filesystem::path& root,
                          const std::filesystem::path& out);
std::map<std::string, Split> read_split_manifest(const std::filesystem::path& path);

std::string sample_id(const LabeledSample& sample, const std::filesystem::path& root);

}  // namespace fishfresh
