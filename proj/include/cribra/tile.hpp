#ifndef CRIBRA_TILE_HPP
#define CRIBRA_TILE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cribra/common.hpp"

namespace cribra {

enum class Label { Cribriform, NonCribriform, Unlabeled };

inline std::string label_to_string(Label l) {
    switch (l) {
        case Label::Cribriform: return "cribriform";
        case Label::NonCribriform: return "non_cribriform";
        default: return "unlabeled";
    }
}

inline Label label_from_string(const std::string& s) {
    if (s == "cribriform") return Label::Cribriform;
    if (s == "non_cribriform") return Label::NonCribriform;
    if (s == "unlabeled" || s.empty()) return Label::Unlabeled;
    throw ConfigError("unknown label: " + s);
}

// Translation/rotation lineage of an augmented tile.
struct TransformInfo {
    int dx = 0;
    int dy = 0;
    int theta = 0; // degrees
};

// 8-bit RGB raster with provenance. Immutable after construction by
// convention: all operations return new tiles.
struct Tile {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major, interleaved RGB
    std::string id;
    std::string patient_id;
    Label label = Label::Unlabeled;
    std::optional<TransformInfo> transform;

    std::uint8_t at(int row, int col, int ch) const {
        return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
    }
    std::uint8_t& at(int row, int col, int ch) {
        return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
    }
};

inline Tile make_tile(int width, int height, std::uint8_t r = 0, std::uint8_t g = 0,
                      std::uint8_t b = 0) {
    Tile t;
    t.width = width;
    t.height = height;
    t.pixels.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < t.pixels.size(); i += 3) {
        t.pixels[i] = r;
        t.pixels[i + 1] = g;
        t.pixels[i + 2] = b;
    }
    return t;
}

// Real-valued luminance raster in [0, 255].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> values; // row-major

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
    double& at(int row, int col) {
        return values[static_cast<std::size_t>(row) * width + col];
    }
};

// ITU-R 601 luminance, kept real-valued so thresholding sees no rounding.
inline GrayImage to_gray(const Tile& tile) {
    GrayImage g;
    g.width = tile.width;
    g.height = tile.height;
    g.values.resize(static_cast<std::size_t>(tile.width) * tile.height);
    const std::uint8_t* p = tile.pixels.data();
    for (std::size_t i = 0; i < g.values.size(); ++i, p += 3)
        g.values[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
    return g;
}

// Area-average (box) downscale of a square tile. Exact on constant images;
// supports non-integer scale factors via fractional pixel overlap weights.
inline Tile downscale(const Tile& tile, int side) {
    if (tile.width != tile.height) throw NonSquareTile("downscale: tile is not square");
    if (side > tile.width) throw UpscaleRequested("downscale: side exceeds tile size");
    if (side == tile.width) return tile;

    Tile out = tile;
    out.width = out.height = side;
    out.pixels.assign(static_cast<std::size_t>(side) * side * 3, 0);
    const double scale = static_cast<double>(tile.width) / side;
    for (int oy = 0; oy < side; ++oy) {
        const double y0 = oy * scale, y1 = (oy + 1) * scale;
        for (int ox = 0; ox < side; ++ox) {
            const double x0 = ox * scale, x1 = (ox + 1) * scale;
            double acc[3] = {0, 0, 0};
            double wsum = 0;
            for (int sy = static_cast<int>(y0); sy < static_cast<int>(std::ceil(y1)); ++sy) {
                const double wy = std::min<double>(y1, sy + 1) - std::max<double>(y0, sy);
                for (int sx = static_cast<int>(x0); sx < static_cast<int>(std::ceil(x1)); ++sx) {
                    const double wx = std::min<double>(x1, sx + 1) - std::max<double>(x0, sx);
                    const double w = wx * wy;
                    for (int c = 0; c < 3; ++c) acc[c] += w * tile.at(sy, sx, c);
                    wsum += w;
                }
            }
            for (int c = 0; c < 3; ++c) {
                double v = acc[c] / wsum;
                out.at(oy, ox, c) =
                    static_cast<std::uint8_t>(std::lround(std::min(255.0, std::max(0.0, v))));
            }
        }
    }
    return out;
}

enum class RejectionReason { OutOfBounds, BlankRegion };

struct Rejection {
    RejectionReason reason;
};

using ExtractResult = std::variant<Tile, Rejection>;

namespace detail {

// Bilinear sample in pixel-center coordinates: pixel (row, col) has its
// center at (col + 0.5, row + 0.5). Returns false when the sample footprint
// leaves the raster.
inline bool bilinear_sample(const Tile& t, double px, double py, double out_rgb[3]) {
    const double fx = px - 0.5, fy = py - 0.5;
    if (fx < 0 || fy < 0 || fx > t.width - 1 || fy > t.height - 1) return false;
    int x0 = static_cast<int>(fx), y0 = static_cast<int>(fy);
    if (x0 == t.width - 1) x0--;
    if (y0 == t.height - 1) y0--;
    if (t.width == 1) x0 = 0;
    if (t.height == 1) y0 = 0;
    const double ax = fx - x0, ay = fy - y0;
    const int x1 = std::min(x0 + 1, t.width - 1);
    const int y1 = std::min(y0 + 1, t.height - 1);
    for (int c = 0; c < 3; ++c) {
        const double top = (1 - ax) * t.at(y0, x0, c) + ax * t.at(y0, x1, c);
        const double bot = (1 - ax) * t.at(y1, x0, c) + ax * t.at(y1, x1, c);
        out_rgb[c] = (1 - ay) * top + ay * bot;
    }
    return true;
}

} // namespace detail

// Extract a side x side window centered at (x, y) after rotating the context
// by theta degrees about (x, y). Inverse-mapped with bilinear interpolation.
// The window is axis-aligned in the output; (x, y) is in pixel-center
// coordinates (an integer center puts the window edge on a pixel boundary,
// so theta = 0 reduces to an exact crop when it fits).
inline ExtractResult extract_region(const Tile& context, double cx, double cy, int side,
                                    int theta) {
    if (theta != 0 && theta != 60 && theta != 120)
        throw InvalidTheta("extract_region: theta must be 0, 60 or 120");

    const double rad = theta * M_PI / 180.0;
    const double cosr = std::cos(-rad), sinr = std::sin(-rad);

    Tile out;
    out.width = out.height = side;
    out.pixels.resize(static_cast<std::size_t>(side) * side * 3);
    out.id = context.id;
    out.patient_id = context.patient_id;
    out.label = context.label;

    const double half = side / 2.0;
    for (int row = 0; row < side; ++row) {
        for (int col = 0; col < side; ++col) {
            const double ox = col + 0.5 - half;
            const double oy = row + 0.5 - half;
            double sx, sy;
            if (theta == 0) {
                sx = cx + ox;
                sy = cy + oy;
            } else {
                sx = cx + cosr * ox - sinr * oy;
                sy = cy + sinr * ox + cosr * oy;
            }
            double rgb[3];
            if (!detail::bilinear_sample(context, sx, sy, rgb))
                return Rejection{RejectionReason::OutOfBounds};
            for (int c = 0; c < 3; ++c)
                out.at(row, col, c) =
                    static_cast<std::uint8_t>(std::lround(std::min(255.0, std::max(0.0, rgb[c]))));
        }
    }
    return out;
}

} // namespace cribra

#endif
