#ifndef CRIBRA_AUGMENTATION_HPP
#define CRIBRA_AUGMENTATION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/tile.hpp"

namespace cribra {

// The 5x5x3 sampling grid: translations +-k*delta along each axis crossed
// with the rotation set.
struct AugmentationGrid {
    int delta = 50;
    int k_max = 2;
    std::vector<int> thetas = {0, 60, 120};
    int side = 1024;

    std::size_t variant_count() const {
        const std::size_t t = static_cast<std::size_t>(2 * k_max + 1);
        return t * t * thetas.size();
    }
};

struct RejectionPolicy {
    double max_blank_fraction = 0.90;
    int blank_luminance = 240; // min(R,G,B) >= this counts as blank
    bool allow_out_of_bounds = false;
};

struct Variant {
    int dx = 0, dy = 0, theta = 0;
    double center_x = 0, center_y = 0;
};

// Deterministic row-major enumeration: dy outer, dx inner, theta innermost.
inline std::vector<Variant> enumerate_variants(const AugmentationGrid& grid, double origin_x,
                                               double origin_y) {
    std::vector<Variant> out;
    out.reserve(grid.variant_count());
    for (int ky = -grid.k_max; ky <= grid.k_max; ++ky)
        for (int kx = -grid.k_max; kx <= grid.k_max; ++kx)
            for (int theta : grid.thetas) {
                Variant v;
                v.dx = kx * grid.delta;
                v.dy = ky * grid.delta;
                v.theta = theta;
                v.center_x = origin_x + v.dx;
                v.center_y = origin_y + v.dy;
                out.push_back(v);
            }
    return out;
}

inline double blank_fraction(const Tile& t, int blank_luminance) {
    std::size_t blank = 0;
    const std::size_t n = t.pixels.size() / 3;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t mn = std::min({t.pixels[3 * i], t.pixels[3 * i + 1],
                                          t.pixels[3 * i + 2]});
        if (mn >= blank_luminance) ++blank;
    }
    return static_cast<double>(blank) / static_cast<double>(n);
}

namespace detail {

// Fallback used only when the policy explicitly allows out-of-bounds
// windows: samples outside the context read as black.
inline ExtractResult extract_region_zero_padded(const Tile& context, double cx, double cy,
                                                int side, int theta) {
    const double rad = theta * M_PI / 180.0;
    const double cosr = std::cos(-rad), sinr = std::sin(-rad);
    Tile out;
    out.width = out.height = side;
    out.pixels.assign(static_cast<std::size_t>(side) * side * 3, 0);
    out.id = context.id;
    out.patient_id = context.patient_id;
    out.label = context.label;
    const double half = side / 2.0;
    for (int row = 0; row < side; ++row)
        for (int col = 0; col < side; ++col) {
            const double ox = col + 0.5 - half, oy = row + 0.5 - half;
            const double sx = cx + cosr * ox - sinr * oy;
            const double sy = cy + sinr * ox + cosr * oy;
            double rgb[3];
            if (bilinear_sample(context, sx, sy, rgb))
                for (int c = 0; c < 3; ++c)
                    out.at(row, col, c) = static_cast<std::uint8_t>(
                        std::lround(std::min(255.0, std::max(0.0, rgb[c]))));
        }
    return out;
}

} // namespace detail

struct RejectionEntry {
    Variant variant;
    std::string reason; // "out_of_bounds" or "blank_region"
};

struct AugmentationBatch {
    std::vector<Tile> accepted;
    std::vector<RejectionEntry> rejected;
};

// Run every grid variant through extract_region, drop the ones that leave
// the context or are mostly blank, and stamp lineage onto the survivors.
inline AugmentationBatch sample_augmented(const Tile& context, const AugmentationGrid& grid,
                                          double origin_x, double origin_y,
                                          const RejectionPolicy& policy) {
    AugmentationBatch batch;
    for (const Variant& v : enumerate_variants(grid, origin_x, origin_y)) {
        ExtractResult res = extract_region(context, v.center_x, v.center_y, grid.side, v.theta);
        if (std::holds_alternative<Rejection>(res) && policy.allow_out_of_bounds)
            res = detail::extract_region_zero_padded(context, v.center_x, v.center_y, grid.side,
                                                     v.theta);
        if (std::holds_alternative<Rejection>(res)) {
            batch.rejected.push_back({v, "out_of_bounds"});
            continue;
        }
        Tile tile = std::move(std::get<Tile>(res));
        if (blank_fraction(tile, policy.blank_luminance) > policy.max_blank_fraction) {
            batch.rejected.push_back({v, "blank_region"});
            continue;
        }
        tile.transform = TransformInfo{v.dx, v.dy, v.theta};
        batch.accepted.push_back(std::move(tile));
    }
    return batch;
}

} // namespace cribra

#endif
