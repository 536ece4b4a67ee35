#include "fishfresh/feature_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fishfresh/errors.hpp"

namespace fishfresh {

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_feature_matrix(const FeatureSetSpec& spec, const std::vector<FeatureRow>& rows,
                          const std::filesystem::path& out) {
    for (const FeatureRow& row : rows) {
        if (row.features.spec == nullptr || row.features.spec->id != spec.id)
            throw SchemaError("write_feature_matrix: row '" + row.sample_id +
                              "' does not belong to feature set " + spec.id);
        if (static_cast<int>(row.features.values.size()) != spec.dimensionality)
            throw SchemaError("write_feature_matrix: row '" + row.sample_id +
                              "' has wrong dimensionality");
    }

    std::ofstream f(out);
    if (!f) throw IoError("cannot write feature matrix: " + out.string());
    for (const std::string& name : spec.column_names) f << name << ',';
    f << "label\n";
    for (const FeatureRow& row : rows) {
        for (double v : row.features.values) f << format_value(v) << ',';
        f << static_cast<int>(row.label) << '\n';
    }
    if (!f) throw IoError("short write to feature matrix: " + out.string());
}

FeatureMatrix read_feature_matrix(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open feature matrix: " + path.string());

    std::string line;
    if (!std::getline(f, line)) throw SchemaError("feature matrix has no header: " + path.string());
    FeatureMatrix m;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) m.names.push_back(cell);
    }
    if (m.names.empty() || m.names.back() != "label")
        throw SchemaError("feature matrix header must end with 'label': " + path.string());
    m.names.pop_back();
    m.X.cols = m.names.size();

    size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> values;
        values.reserve(m.X.cols + 1);
        while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
        if (values.size() != m.X.cols + 1)
            throw SchemaError("feature matrix row " + std::to_string(line_no) + " has " +
                              std::to_string(values.size()) + " cells, expected " +
                              std::to_string(m.X.cols + 1));
        m.labels.push_back(static_cast<int>(values.back()));
        values.pop_back();
        m.X.append_row(values);
    }
    return m;
}

}  // namespace fishfresh
