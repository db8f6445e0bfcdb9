#ifndef CRIBRA_FEATURES_LOCAL_HPP
#define CRIBRA_FEATURES_LOCAL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/segmentation.hpp"
#include "cribra/stats.hpp"

namespace cribra {

// Ellipse-model shape measurements of one nucleus.
struct ShapeMeasures {
    double minor_axis = 0;
    double major_axis = 0;
    double eccentricity = 0;
    double orientation = 0; // radians in (-pi/2, pi/2]
    double solidity = 0;
};

// Intensity distribution from centroid to boundary in 4 equal-width
// normalized-radius rings.
struct RadialMeasures {
    double mean_intensity = 0;
    std::array<double, 4> ring_means{};
};

namespace detail {

// Monotone-chain convex hull; input points need not be sorted or unique.
inline std::vector<std::pair<double, double>> convex_hull(
    std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<double, double>> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double polygon_area(const std::vector<std::pair<double, double>>& poly) {
    double a = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        a += p.first * q.second - q.first * p.second;
    }
    return std::abs(a) / 2.0;
}

} // namespace detail

// Second-moment ellipse of the pixel set. Coordinate covariance is the
// population covariance plus the 1/12 per-axis correction for the unit
// pixel extent; axes are 4*sqrt(eigenvalue), matching the standard
// region-properties ellipse. Solidity uses the hull over pixel corner
// squares, so one-pixel-wide runs still give exactly 1.
inline ShapeMeasures shape_measures(const NucleusObject& obj) {
    const double n = static_cast<double>(obj.pixels.size());
    double mxx = 0, myy = 0, mxy = 0;
    for (const auto& [r, c] : obj.pixels) {
        const double dx = c - obj.centroid_x;
        const double dy = r - obj.centroid_y;
        mxx += dx * dx;
        myy += dy * dy;
        mxy += dx * dy;
    }
    mxx = mxx / n + 1.0 / 12.0;
    myy = myy / n + 1.0 / 12.0;
    mxy /= n;

    const double tr = mxx + myy;
    const double disc = std::sqrt(std::max(0.0, (mxx - myy) * (mxx - myy) + 4 * mxy * mxy));
    const double l1 = (tr + disc) / 2.0;
    const double l2 = (tr - disc) / 2.0;

    ShapeMeasures s;
    s.major_axis = 4.0 * std::sqrt(std::max(0.0, l1));
    s.minor_axis = 4.0 * std::sqrt(std::max(0.0, l2));
    s.eccentricity = l1 > 0 ? std::sqrt(std::max(0.0, 1.0 - l2 / l1)) : 0.0;
    double theta = 0.5 * std::atan2(2 * mxy, mxx - myy);
    if (theta <= -M_PI / 2) theta += M_PI;
    s.orientation = theta;

    std::vector<std::pair<double, double>> corners;
    corners.reserve(obj.pixels.size() * 4);
    for (const auto& [r, c] : obj.pixels) {
        corners.emplace_back(c - 0.5, r - 0.5);
        corners.emplace_back(c + 0.5, r - 0.5);
        corners.emplace_back(c - 0.5, r + 0.5);
        corners.emplace_back(c + 0.5, r + 0.5);
    }
    const double hull_area = detail::polygon_area(detail::convex_hull(std::move(corners)));
    s.solidity = hull_area > 0 ? std::min(1.0, n / hull_area) : 1.0;
    return s;
}

inline RadialMeasures radial_measures(const NucleusObject& obj) {
    RadialMeasures m;
    const std::size_t n = obj.pixels.size();
    double max_r = 0;
    std::vector<double> radii(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = obj.pixels[k].second - obj.centroid_x;
        const double dy = obj.pixels[k].first - obj.centroid_y;
        radii[k] = std::sqrt(dx * dx + dy * dy);
        max_r = std::max(max_r, radii[k]);
    }
    std::array<double, 4> sums{};
    std::array<std::size_t, 4> counts{};
    double total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = max_r > 0 ? radii[k] / max_r : 0.0;
        const int ring = std::min(static_cast<int>(r * 4), 3);
        sums[static_cast<std::size_t>(ring)] += obj.pixel_intensities[k];
        counts[static_cast<std::size_t>(ring)]++;
        total += obj.pixel_intensities[k];
    }
    m.mean_intensity = total / static_cast<double>(n);
    for (int ring = 0; ring < 4; ++ring)
        m.ring_means[static_cast<std::size_t>(ring)] =
            counts[static_cast<std::size_t>(ring)]
                ? sums[static_cast<std::size_t>(ring)] /
                      static_cast<double>(counts[static_cast<std::size_t>(ring)])
                : m.mean_intensity; // empty-ring fill rule
    return m;
}

// Per-object record behind the --dump-objects CSV and the formula oracle.
struct ObjectRecord {
    int id;
    double cx, cy;
    double area;
    ShapeMeasures shape;
    RadialMeasures radial;
};

inline std::vector<ObjectRecord> object_records(const SegmentationResult& seg) {
    std::vector<ObjectRecord> recs;
    recs.reserve(seg.objects.size());
    for (const auto& obj : seg.objects) {
        ObjectRecord r;
        r.id = obj.id;
        r.cx = obj.centroid_x;
        r.cy = obj.centroid_y;
        r.area = static_cast<double>(obj.area());
        r.shape = shape_measures(obj);
        r.radial = radial_measures(obj);
        recs.push_back(r);
    }
    return recs;
}

constexpr std::size_t kLocalFeatureCount = 45;

// Ordered 45-value block: [count + area stats (5)] then per-measurement
// (mu, sigma, disorder, minmax) for the 5 radial and 5 shape measurements.
inline std::vector<double> local_feature_block(
    const SegmentationResult& seg, DisorderConvention conv = DisorderConvention::Paper) {
    if (seg.objects.empty()) throw Error("local_feature_block: no nuclei");
    const auto recs = object_records(seg);
    const std::size_t n = recs.size();

    std::vector<double> out;
    out.reserve(kLocalFeatureCount);
    auto push_stats = [&](const std::vector<double>& vals) {
        const StatVector s = aggregate(vals, conv);
        out.push_back(s.mean);
        out.push_back(s.std);
        out.push_back(s.disorder);
        out.push_back(s.minmax_ratio);
    };
    auto collect = [&](auto&& get) {
        std::vector<double> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = get(recs[i]);
        return vals;
    };

    out.push_back(static_cast<double>(n));
    push_stats(collect([](const ObjectRecord& r) { return r.area; }));

    push_stats(collect([](const ObjectRecord& r) { return r.radial.mean_intensity; }));
    for (std::size_t ring = 0; ring < 4; ++ring)
        push_stats(collect([ring](const ObjectRecord& r) { return r.radial.ring_means[ring]; }));

    push_stats(collect([](const ObjectRecord& r) { return r.shape.minor_axis; }));
    push_stats(collect([](const ObjectRecord& r) { return r.shape.major_axis; }));
    push_stats(collect([](const ObjectRecord& r) { return r.shape.eccentricity; }));
    push_stats(collect([](const ObjectRecord& r) { return r.shape.orientation; }));
    push_stats(collect([](const ObjectRecord& r) { return r.shape.solidity; }));
    return out;
}

} // namespace cribra

#endif
