#ifndef CRIBRA_EMBEDDINGS_HPP
#define CRIBRA_EMBEDDINGS_HPP

#include <map>
#include <string>
#include <vector>

#include "cribra/csv.hpp"

namespace cribra {

// Contents of one embedding CSV: `#dim=D` header line, then
// tile_id,v1,...,vD rows with unique ids.
struct EmbeddingFile {
    std::string path;
    int dim = 0;
    std::map<std::string, std::vector<double>> by_tile;
};

inline EmbeddingFile read_embedding_file(const std::string& path) {
    const auto lines = read_lines(path);
    EmbeddingFile f;
    f.path = path;
    bool dim_seen = false;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line.rfind("#dim=", 0) == 0) {
            f.dim = std::stoi(line.substr(5));
            if (f.dim <= 0) throw ConfigError("bad #dim in " + path);
            dim_seen = true;
            continue;
        }
        if (line[0] == '#') continue;
        if (!dim_seen) throw ConfigError("missing #dim=D header in " + path);
        const auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != f.dim + 1)
            throw WidthMismatch("row width != dim in " + path + " for " + fields[0]);
        std::vector<double> v(static_cast<std::size_t>(f.dim));
        for (int i = 0; i < f.dim; ++i) v[static_cast<std::size_t>(i)] =
            std::stod(fields[static_cast<std::size_t>(i) + 1]);
        if (!f.by_tile.emplace(fields[0], std::move(v)).second)
            throw ConfigError("duplicate tile_id in " + path + ": " + fields[0]);
    }
    if (!dim_seen) throw ConfigError("missing #dim=D header in " + path);
    return f;
}

// Concatenate: 57 nuclei features first, then each embedding file's block
// in declaration order.
inline std::vector<double> fuse(const std::vector<double>& features, const std::string& tile_id,
                                const std::vector<EmbeddingFile>& files) {
    std::vector<double> row = features;
    for (const auto& f : files) {
        auto it = f.by_tile.find(tile_id);
        if (it == f.by_tile.end())
            throw MissingEmbedding("tile " + tile_id + " missing from " + f.path);
        row.insert(row.end(), it->second.begin(), it->second.end());
    }
    return row;
}

} // namespace cribra

#endif
