#ifndef CRIBRA_FEATURES_SPATIAL_HPP
#define CRIBRA_FEATURES_SPATIAL_HPP

#include <array>
#include <string>
#include <vector>

#include "cribra/features_local.hpp"
#include "cribra/geometry.hpp"
#include "cribra/segmentation.hpp"
#include "cribra/stats.hpp"

namespace cribra {

constexpr std::size_t kFeatureCount = 57;

// Full nuclei feature record: [0..44] local block, [45..48] MST edge-weight
// stats, [49..56] Delaunay triangle area then perimeter stats. Degenerate
// tiles keep fixed dimensionality with the affected blocks zero-filled and
// valid = false.
struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    bool valid = true;
};

inline const std::vector<std::string>& feature_column_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        auto stats = [&](const std::string& base) {
            n.push_back(base + "_mean");
            n.push_back(base + "_std");
            n.push_back(base + "_disorder");
            n.push_back(base + "_minmax");
        };
        n.push_back("nucleus_count");
        stats("area");
        stats("radial_mean_intensity");
        for (int r = 1; r <= 4; ++r) stats("radial_ring" + std::to_string(r));
        stats("shape_minor_axis");
        stats("shape_major_axis");
        stats("shape_eccentricity");
        stats("shape_orientation");
        stats("shape_solidity");
        stats("mst_edge");
        stats("delaunay_area");
        stats("delaunay_perimeter");
        return n;
    }();
    return names;
}

inline std::vector<Point2> nuclei_centroids(const SegmentationResult& seg) {
    std::vector<Point2> pts;
    pts.reserve(seg.objects.size());
    for (const auto& obj : seg.objects) pts.push_back({obj.centroid_x, obj.centroid_y});
    return dedup_points(std::move(pts));
}

inline FeatureVector assemble_features(const SegmentationResult& seg,
                                       DisorderConvention conv = DisorderConvention::Paper) {
    FeatureVector fv;
    if (seg.objects.empty()) {
        fv.valid = false;
        return fv;
    }

    const auto local = local_feature_block(seg, conv);
    for (std::size_t i = 0; i < kLocalFeatureCount; ++i) fv.values[i] = local[i];

    const auto pts = dedup_points(nuclei_centroids(seg));

    auto write_stats = [&](std::size_t offset, const std::vector<double>& vals) {
        const StatVector s = aggregate(vals, conv);
        fv.values[offset] = s.mean;
        fv.values[offset + 1] = s.std;
        fv.values[offset + 2] = s.disorder;
        fv.values[offset + 3] = s.minmax_ratio;
    };

    if (pts.size() >= 2) {
        const SpanningTree tree = mst(pts);
        std::vector<double> weights;
        weights.reserve(tree.edges.size());
        for (const auto& [i, j, w] : tree.edges) weights.push_back(w);
        write_stats(45, weights);
    } else {
        fv.valid = false;
    }

    bool delaunay_ok = pts.size() >= 3 && !detail::all_collinear(pts);
    if (delaunay_ok) {
        const Triangulation tri = delaunay(pts);
        if (tri.triangles.empty()) {
            delaunay_ok = false;
        } else {
            std::vector<double> areas, perims;
            areas.reserve(tri.triangles.size());
            perims.reserve(tri.triangles.size());
            for (const auto& t : tri.triangles) {
                const Point2& a = pts[static_cast<std::size_t>(t[0])];
                const Point2& b = pts[static_cast<std::size_t>(t[1])];
                const Point2& c = pts[static_cast<std::size_t>(t[2])];
                areas.push_back(triangle_area(a, b, c));
                perims.push_back(triangle_perimeter(a, b, c));
            }
            write_stats(49, areas);
            write_stats(53, perims);
        }
    }
    if (!delaunay_ok) fv.valid = false;
    return fv;
}

} // namespace cribra

#endif
