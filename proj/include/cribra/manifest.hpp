#ifndef CRIBRA_MANIFEST_HPP
#define CRIBRA_MANIFEST_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cribra/csv.hpp"
#include "cribra/tile.hpp"

namespace cribra {

constexpr const char* kFormatVersionLine = "# format_version=1";

// One dataset tile: path, identity, provenance, optional augmentation
// lineage (dx/dy/theta empty for non-augmented tiles).
struct ManifestRow {
    std::string tile_path;
    std::string tile_id;
    std::string patient_id;
    Label label = Label::Unlabeled;
    std::string source_id;
    std::optional<int> dx, dy, theta;
};

inline const std::vector<std::string>& manifest_columns() {
    static const std::vector<std::string> cols = {"tile_path", "tile_id", "patient_id",
                                                  "label",     "source_id", "dx",
                                                  "dy",        "theta"};
    return cols;
}

inline std::vector<ManifestRow> read_manifest(const std::string& path) {
    const auto lines = read_lines(path);
    std::vector<ManifestRow> rows;
    std::set<std::string> seen_ids;
    bool header_seen = false;
    for (const std::string& line : lines) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv_line(line);
        if (!header_seen) {
            if (f.size() < 5 || f[0] != "tile_path")
                throw ConfigError("manifest header mismatch in " + path);
            header_seen = true;
            continue;
        }
        if (f.size() < 5) throw ConfigError("short manifest row in " + path);
        ManifestRow r;
        r.tile_path = f[0];
        r.tile_id = f[1];
        r.patient_id = f[2];
        r.label = label_from_string(f[3]);
        r.source_id = f[4];
        if (f.size() >= 8) {
            if (!f[5].empty()) r.dx = std::stoi(f[5]);
            if (!f[6].empty()) r.dy = std::stoi(f[6]);
            if (!f[7].empty()) r.theta = std::stoi(f[7]);
        }
        if (!seen_ids.insert(r.tile_id).second)
            throw ConfigError("duplicate tile_id in manifest: " + r.tile_id);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline void write_manifest(const std::vector<ManifestRow>& rows, const std::string& path) {
    AtomicFileWriter w(path);
    w.stream() << kFormatVersionLine << "\n";
    for (std::size_t i = 0; i < manifest_columns().size(); ++i)
        w.stream() << (i ? "," : "") << manifest_columns()[i];
    w.stream() << "\n";
    for (const auto& r : rows) {
        w.stream() << csv_quote(r.tile_path) << ',' << csv_quote(r.tile_id) << ','
                   << csv_quote(r.patient_id) << ',' << label_to_string(r.label) << ','
                   << csv_quote(r.source_id) << ','
                   << (r.dx ? std::to_string(*r.dx) : std::string()) << ','
                   << (r.dy ? std::to_string(*r.dy) : std::string()) << ','
                   << (r.theta ? std::to_string(*r.theta) : std::string()) << "\n";
    }
    w.commit();
}

// One row of the 57-column feature CSV.
struct FeatureRow {
    std::string tile_id;
    std::string patient_id;
    Label label = Label::Unlabeled;
    bool valid = true;
    std::vector<double> values; // 57 reals
};

inline void write_feature_csv(const std::vector<FeatureRow>& rows, const std::string& path,
                              const std::vector<std::string>& feature_names) {
    AtomicFileWriter w(path);
    w.stream() << kFormatVersionLine << "\n";
    w.stream() << "id,patient_id,label,valid";
    for (const auto& n : feature_names) w.stream() << ',' << n;
    w.stream() << "\n";
    for (const auto& r : rows) {
        w.stream() << csv_quote(r.tile_id) << ',' << csv_quote(r.patient_id) << ','
                   << label_to_string(r.label) << ',' << (r.valid ? "1" : "0");
        for (double v : r.values) w.stream() << ',' << format_real(v);
        w.stream() << "\n";
    }
    w.commit();
}

inline std::vector<FeatureRow> read_feature_csv(const std::string& path) {
    const auto lines = read_lines(path);
    std::vector<FeatureRow> rows;
    bool header_seen = false;
    for (const std::string& line : lines) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv_line(line);
        if (!header_seen) {
            if (f.size() < 5 || f[0] != "id")
                throw ConfigError("feature CSV header mismatch in " + path);
            header_seen = true;
            continue;
        }
        FeatureRow r;
        r.tile_id = f[0];
        r.patient_id = f[1];
        r.label = label_from_string(f[2]);
        r.valid = f[3] == "1";
        r.values.reserve(f.size() - 4);
        for (std::size_t i = 4; i < f.size(); ++i) r.values.push_back(std::stod(f[i]));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace cribra

#endif
