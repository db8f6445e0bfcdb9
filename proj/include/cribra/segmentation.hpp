#ifndef CRIBRA_SEGMENTATION_HPP
#define CRIBRA_SEGMENTATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/tile.hpp"

namespace cribra {

struct SegConfig {
    int min_area = 40;   // pixels at 1024^2 native scale
    int max_area = 5000; // pixels at 1024^2 native scale
    int native_side = 1024;

    // Area bounds scale quadratically with image side relative to the
    // native tile size.
    SegConfig scaled_for(int side) const {
        SegConfig c = *this;
        const double f = static_cast<double>(side) / native_side;
        c.min_area = std::max(1, static_cast<int>(std::lround(min_area * f * f)));
        c.max_area = std::max(c.min_area, static_cast<int>(std::lround(max_area * f * f)));
        return c;
    }
};

// One segmented nucleus: 4-connected pixel set, centroid in pixel units,
// original intensities aligned with pixels.
struct NucleusObject {
    int id = 0;
    std::vector<std::pair<int, int>> pixels; // (row, col)
    double centroid_x = 0, centroid_y = 0;
    double mean_gray = 0;
    std::vector<double> pixel_intensities;

    std::size_t area() const { return pixels.size(); }
};

struct SegmentationResult {
    std::vector<NucleusObject> objects;
    double threshold_used = 0;
    std::string source_id;
};

// Otsu's method over the 256-bin histogram; returns the class boundary
// b + 1 where bin b maximizes between-class variance (ties toward the
// smaller bin), so `value < threshold` is exactly the dark class
// {floor(value) <= b} for real-valued luminance too.
inline double otsu_threshold(const GrayImage& img) {
    std::array<double, 256> hist{};
    for (double v : img.values) {
        int b = static_cast<int>(v);
        b = std::clamp(b, 0, 255);
        hist[static_cast<std::size_t>(b)] += 1;
    }
    int lo = 0, hi = 255;
    while (lo < 256 && hist[static_cast<std::size_t>(lo)] == 0) ++lo;
    while (hi >= 0 && hist[static_cast<std::size_t>(hi)] == 0) --hi;
    if (lo >= hi) throw DegenerateImage("otsu_threshold: single distinct value");

    const double total = static_cast<double>(img.values.size());
    double sum_all = 0;
    for (int b = 0; b < 256; ++b) sum_all += b * hist[static_cast<std::size_t>(b)];

    double w0 = 0, sum0 = 0, best = -1;
    int best_bin = lo;
    for (int b = 0; b < 255; ++b) {
        w0 += hist[static_cast<std::size_t>(b)];
        if (w0 == 0) continue;
        const double w1 = total - w0;
        if (w1 == 0) break;
        sum0 += b * hist[static_cast<std::size_t>(b)];
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (between > best) {
            best = between;
            best_bin = b;
        }
    }
    return best_bin + 1.0;
}

namespace detail {

// 4-connected component labels over a boolean mask. Returns labels (0 =
// background, 1..n = components) and component count.
inline int label_components(const std::vector<char>& mask, int width, int height,
                            std::vector<int>& labels) {
    labels.assign(mask.size(), 0);
    int next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < mask.size(); ++start) {
        if (!mask[start] || labels[start]) continue;
        ++next;
        stack.push_back(start);
        labels[start] = next;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            const int r = static_cast<int>(i) / width, c = static_cast<int>(i) % width;
            const int nr[4] = {r - 1, r + 1, r, r};
            const int nc[4] = {c, c, c - 1, c + 1};
            for (int k = 0; k < 4; ++k) {
                if (nr[k] < 0 || nr[k] >= height || nc[k] < 0 || nc[k] >= width) continue;
                const std::size_t j = static_cast<std::size_t>(nr[k]) * width + nc[k];
                if (mask[j] && !labels[j]) {
                    labels[j] = next;
                    stack.push_back(j);
                }
            }
        }
    }
    return next;
}

} // namespace detail

// Threshold (nuclei are dark), label 4-connected components, filter by
// pixel count, fill enclosed holes of the survivors.
inline SegmentationResult segment_nuclei(const GrayImage& img, const SegConfig& cfg,
                                         const std::string& source_id = {}) {
    SegmentationResult res;
    res.source_id = source_id;
    res.threshold_used = otsu_threshold(img);

    const int W = img.width, H = img.height;
    std::vector<char> fg(img.values.size());
    for (std::size_t i = 0; i < img.values.size(); ++i)
        fg[i] = img.values[i] < res.threshold_used ? 1 : 0;

    std::vector<int> labels;
    const int n = detail::label_components(fg, W, H, labels);

    std::vector<int> areas(static_cast<std::size_t>(n) + 1, 0);
    for (int l : labels) areas[static_cast<std::size_t>(l)]++;

    // keep increments label order = scan order, so object ids are stable
    std::vector<int> keep(static_cast<std::size_t>(n) + 1, 0);
    int next_id = 0;
    for (int l = 1; l <= n; ++l)
        if (areas[static_cast<std::size_t>(l)] >= cfg.min_area &&
            areas[static_cast<std::size_t>(l)] <= cfg.max_area)
            keep[static_cast<std::size_t>(l)] = ++next_id;

    if (next_id == 0) return res;

    // Holes: background pixels not reachable from the image border. Each
    // hole component is claimed by the kept object that borders it.
    std::vector<char> bg(fg.size());
    for (std::size_t i = 0; i < fg.size(); ++i) bg[i] = fg[i] ? 0 : 1;
    std::vector<int> bg_labels;
    detail::label_components(bg, W, H, bg_labels);
    std::vector<char> border_bg(bg_labels.size() + 1, 0);
    auto mark = [&](int r, int c) {
        const std::size_t i = static_cast<std::size_t>(r) * W + c;
        if (bg_labels[i]) border_bg[static_cast<std::size_t>(bg_labels[i])] = 1;
    };
    for (int c = 0; c < W; ++c) { mark(0, c); mark(H - 1, c); }
    for (int r = 0; r < H; ++r) { mark(r, 0); mark(r, W - 1); }

    res.objects.resize(static_cast<std::size_t>(next_id));
    for (int oid = 1; oid <= next_id; ++oid)
        res.objects[static_cast<std::size_t>(oid) - 1].id = oid;

    auto add_pixel = [&](int oid, int r, int c) {
        NucleusObject& obj = res.objects[static_cast<std::size_t>(oid) - 1];
        obj.pixels.emplace_back(r, c);
        obj.pixel_intensities.push_back(img.at(r, c));
    };

    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * W + c;
            const int oid = keep[static_cast<std::size_t>(labels[i])];
            if (oid) add_pixel(oid, r, c);
        }

    // Assign each enclosed hole to the unique kept object adjacent to it.
    std::vector<int> hole_owner; // bg label -> object id (0 none, -1 conflict)
    {
        int max_bg = 0;
        for (int l : bg_labels) max_bg = std::max(max_bg, l);
        hole_owner.assign(static_cast<std::size_t>(max_bg) + 1, 0);
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < W; ++c) {
                const std::size_t i = static_cast<std::size_t>(r) * W + c;
                const int bl = bg_labels[i];
                if (!bl || border_bg[static_cast<std::size_t>(bl)]) continue;
                const int nr[4] = {r - 1, r + 1, r, r};
                const int nc[4] = {c, c, c - 1, c + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nr[k] < 0 || nr[k] >= H || nc[k] < 0 || nc[k] >= W) continue;
                    const std::size_t j = static_cast<std::size_t>(nr[k]) * W + nc[k];
                    const int oid = keep[static_cast<std::size_t>(labels[j])];
                    if (!oid) continue;
                    int& owner = hole_owner[static_cast<std::size_t>(bl)];
                    if (owner == 0) owner = oid;
                    else if (owner != oid) owner = -1;
                }
            }
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < W; ++c) {
                const std::size_t i = static_cast<std::size_t>(r) * W + c;
                const int bl = bg_labels[i];
                if (!bl || border_bg[static_cast<std::size_t>(bl)]) continue;
                const int owner = hole_owner[static_cast<std::size_t>(bl)];
                if (owner > 0) add_pixel(owner, r, c);
            }
    }

    for (NucleusObject& obj : res.objects) {
        double sx = 0, sy = 0, si = 0;
        for (std::size_t k = 0; k < obj.pixels.size(); ++k) {
            sy += obj.pixels[k].first;
            sx += obj.pixels[k].second;
            si += obj.pixel_intensities[k];
        }
        const double n_px = static_cast<double>(obj.pixels.size());
        obj.centroid_x = sx / n_px;
        obj.centroid_y = sy / n_px;
        obj.mean_gray = si / n_px;
    }
    return res;
}

// Fraction of the image covered by nucleus pixels.
inline double image_occupied_area(const SegmentationResult& seg, const GrayImage& img) {
    std::size_t covered = 0;
    for (const auto& obj : seg.objects) covered += obj.pixels.size();
    return static_cast<double>(covered) /
           (static_cast<double>(img.width) * static_cast<double>(img.height));
}

// Debug label raster: object k gets gray value (k mod 255) + 1.
inline std::vector<std::uint8_t> label_image(const SegmentationResult& seg, int width,
                                             int height) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(width) * height, 0);
    for (const auto& obj : seg.objects) {
        const std::uint8_t v = static_cast<std::uint8_t>((obj.id % 255) + 1);
        for (const auto& [r, c] : obj.pixels)
            out[static_cast<std::size_t>(r) * width + c] = v;
    }
    return out;
}

} // namespace cribra

#endif
