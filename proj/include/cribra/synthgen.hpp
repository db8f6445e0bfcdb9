#ifndef CRIBRA_SYNTHGEN_HPP
#define CRIBRA_SYNTHGEN_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/tile.hpp"

namespace cribra {

enum class SynthClass { CribriformLike, NonCribriformLike };

// Caricature of H&E gland morphology, deterministic per seed. Exists to
// make the pipeline's end-to-end behavior testable without real slides:
// CribriformLike packs nuclei densely into one epithelial disk perforated
// by round lumina; NonCribriformLike scatters separated single-lumen rings.
struct SynthSpec {
    std::uint64_t seed = 1;
    int side = 256;
    SynthClass cls = SynthClass::CribriformLike;
    int n_glands = 3;          // NonCribriformLike ring count
    int nuclei_per_gland = 12; // nuclei per ring / per sieve tile
    int lumina_per_gland = 4;  // >= 3 for CribriformLike, 1 otherwise
    double noise_sigma = 0.0;
    std::array<std::uint8_t, 3> background_rgb = {235, 224, 233};
    std::array<std::uint8_t, 3> nucleus_rgb = {72, 48, 110};
    std::string patient_id = "synth_p01";
};

struct SynthResult {
    Tile tile;
    std::vector<char> nuclei_mask; // side*side, 1 = nucleus pixel
    int nucleus_count = 0;
    SynthClass cls = SynthClass::CribriformLike;
};

namespace detail {

struct Disk {
    double x, y, r;
};

inline bool disk_fits(const std::vector<Disk>& placed, double x, double y, double r,
                      double clearance) {
    for (const Disk& d : placed) {
        const double dist = std::hypot(x - d.x, y - d.y);
        if (dist < r + d.r + clearance) return false;
    }
    return true;
}

// Filled ellipse rasterization onto the nucleus mask.
inline void draw_nucleus(std::vector<char>& mask, std::vector<float>& shading, int side,
                         double cx, double cy, double rx, double ry, double angle,
                         double shade, double rim) {
    const double ca = std::cos(angle), sa = std::sin(angle);
    const int r0 = std::max(0, static_cast<int>(cy - rx - ry - 1));
    const int r1 = std::min(side - 1, static_cast<int>(cy + rx + ry + 1));
    const int c0 = std::max(0, static_cast<int>(cx - rx - ry - 1));
    const int c1 = std::min(side - 1, static_cast<int>(cx + rx + ry + 1));
    for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c) {
            const double dx = c - cx, dy = r - cy;
            const double u = (dx * ca + dy * sa) / rx;
            const double v = (-dx * sa + dy * ca) / ry;
            const double rho2 = u * u + v * v;
            if (rho2 <= 1.0) {
                const std::size_t at = static_cast<std::size_t>(r) * side + c;
                mask[at] = 1;
                // darkest at the centre, brightening toward the rim
                shading[at] = static_cast<float>(shade + rim * rho2);
            }
        }
}

} // namespace detail

inline SynthResult generate(const SynthSpec& spec) {
    const int side = spec.side;
    SynthResult res;
    res.cls = spec.cls;
    res.nuclei_mask.assign(static_cast<std::size_t>(side) * side, 0);

    std::mt19937_64 rng(mix_seed(spec.seed, 0x9E17u));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // nucleus ellipse semi-axes in pixels, scaled to tile size
    const double nuc_r = std::max(2.5, side / 80.0);
    const double clearance = 3.0; // no touching nuclei by construction

    std::vector<detail::Disk> nuclei; // centers + bounding radius
    std::vector<detail::Disk> lumina; // bright holes
    // per-nucleus ellipse and shading parameters; the two classes draw them
    // from different ranges so size, shape, and intensity statistics all
    // carry class signal, as they do in real epithelium
    std::vector<double> nuc_angles, nuc_ratios, nuc_sizes, nuc_shade, nuc_rim;
    const bool crib = spec.cls == SynthClass::CribriformLike;

    auto try_place_nucleus = [&](double x, double y) {
        const double size = crib ? 0.90 + 0.55 * unit(rng) : 0.95 + 0.10 * unit(rng);
        const double ratio = crib ? 0.45 + 0.30 * unit(rng) : 0.78 + 0.17 * unit(rng);
        const double shade = crib ? -35.0 + 20.0 * unit(rng) : 6.0 * unit(rng);
        const double rim = crib ? 35.0 + 10.0 * unit(rng) : 4.0 * unit(rng);
        const double rmax = nuc_r * size + 0.5;
        if (x - rmax < 1 || y - rmax < 1 || x + rmax > side - 2 || y + rmax > side - 2)
            return false;
        if (!detail::disk_fits(nuclei, x, y, rmax, clearance)) return false;
        for (const auto& lum : lumina)
            if (std::hypot(x - lum.x, y - lum.y) < lum.r + rmax + 1) return false;
        nuclei.push_back({x, y, rmax});
        nuc_angles.push_back(unit(rng) * M_PI);
        nuc_ratios.push_back(ratio);
        nuc_sizes.push_back(size);
        nuc_shade.push_back(shade);
        nuc_rim.push_back(rim);
        return true;
    };

    const int max_attempts = 20000;
    if (spec.cls == SynthClass::CribriformLike) {
        if (spec.lumina_per_gland < 3)
            throw InfeasibleGeometry("CribriformLike needs >= 3 lumina");
        // one large epithelial disk, centered with jitter
        const double gx = side / 2.0 + (unit(rng) - 0.5) * side * 0.08;
        const double gy = side / 2.0 + (unit(rng) - 0.5) * side * 0.08;
        const double gr = side * 0.36;
        // punched-out lumina inside the disk
        const double lum_r = side * 0.055;
        int attempts = 0;
        while (static_cast<int>(lumina.size()) < spec.lumina_per_gland &&
               attempts++ < max_attempts) {
            const double a = unit(rng) * 2 * M_PI;
            const double d = unit(rng) * (gr - lum_r - 2 * nuc_r);
            const double x = gx + d * std::cos(a), y = gy + d * std::sin(a);
            if (detail::disk_fits(lumina, x, y, lum_r, 2.0)) lumina.push_back({x, y, lum_r});
        }
        if (static_cast<int>(lumina.size()) < spec.lumina_per_gland)
            throw InfeasibleGeometry("cannot place lumina");
        const int target = spec.n_glands * spec.nuclei_per_gland;
        attempts = 0;
        while (static_cast<int>(nuclei.size()) < target && attempts++ < max_attempts) {
            const double a = unit(rng) * 2 * M_PI;
            const double d = std::sqrt(unit(rng)) * (gr - nuc_r * 1.5);
            try_place_nucleus(gx + d * std::cos(a), gy + d * std::sin(a));
        }
        if (static_cast<int>(nuclei.size()) < target)
            throw InfeasibleGeometry("cannot place nuclei in sieve disk");
    } else {
        if (spec.lumina_per_gland != 1)
            throw InfeasibleGeometry("NonCribriformLike uses exactly 1 lumen per gland");
        // separated rings of nuclei, each around one lumen
        const double ring_r = side * 0.13;
        std::vector<detail::Disk> glands;
        int attempts = 0;
        while (static_cast<int>(glands.size()) < spec.n_glands && attempts++ < max_attempts) {
            const double margin = ring_r + nuc_r * 2 + 2;
            const double x = margin + unit(rng) * (side - 2 * margin);
            const double y = margin + unit(rng) * (side - 2 * margin);
            if (detail::disk_fits(glands, x, y, ring_r + nuc_r * 2, side * 0.06))
                glands.push_back({x, y, ring_r});
        }
        if (static_cast<int>(glands.size()) < spec.n_glands)
            throw InfeasibleGeometry("cannot place glands");
        for (const auto& g : glands) {
            lumina.push_back({g.x, g.y, ring_r - nuc_r * 1.8});
            // evenly spaced slots with a little jitter: random angles jam on
            // tight rings, even slots always fit when the circumference does
            const double phase = unit(rng) * 2 * M_PI;
            const double slot = 2 * M_PI / spec.nuclei_per_gland;
            for (int i = 0; i < spec.nuclei_per_gland; ++i) {
                bool placed = false;
                for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
                    const double a = phase + slot * (i + 0.2 * (unit(rng) - 0.5));
                    const double d = ring_r + (unit(rng) - 0.5) * nuc_r * 0.5;
                    placed = try_place_nucleus(g.x + d * std::cos(a), g.y + d * std::sin(a));
                }
                if (!placed) throw InfeasibleGeometry("cannot place ring nuclei");
            }
        }
    }

    std::vector<float> shading(res.nuclei_mask.size(), 0.0f);
    for (std::size_t i = 0; i < nuclei.size(); ++i)
        detail::draw_nucleus(res.nuclei_mask, shading, side, nuclei[i].x, nuclei[i].y,
                             nuc_r * nuc_sizes[i], nuc_r * nuc_sizes[i] * nuc_ratios[i],
                             nuc_angles[i], nuc_shade[i], nuc_rim[i]);
    res.nucleus_count = static_cast<int>(nuclei.size());

    Tile& t = res.tile;
    t.width = t.height = side;
    t.pixels.resize(static_cast<std::size_t>(side) * side * 3);
    t.patient_id = spec.patient_id;
    t.label = spec.cls == SynthClass::CribriformLike ? Label::Cribriform : Label::NonCribriform;
    std::normal_distribution<double> noise(0.0, spec.noise_sigma);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            const std::size_t at = static_cast<std::size_t>(r) * side + c;
            const bool nuc = res.nuclei_mask[at] != 0;
            for (int ch = 0; ch < 3; ++ch) {
                double v = nuc ? spec.nucleus_rgb[static_cast<std::size_t>(ch)] + shading[at]
                               : spec.background_rgb[static_cast<std::size_t>(ch)];
                if (spec.noise_sigma > 0) v += noise(rng);
                t.at(r, c, ch) =
                    static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    return res;
}

} // namespace cribra

#endif
