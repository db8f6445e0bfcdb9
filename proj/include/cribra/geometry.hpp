#ifndef CRIBRA_GEOMETRY_HPP
#define CRIBRA_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <tuple>
#include <vector>

#include "cribra/common.hpp"

namespace cribra {

struct Point2 {
    double x = 0, y = 0;
};

inline double point_distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Exact-coordinate duplicates merged; returned points keep first-occurrence
// order of the canonical sort (construction below is insertion-order free).
inline std::vector<Point2> dedup_points(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    return pts;
}

struct Triangulation {
    std::vector<std::array<int, 3>> triangles; // sorted index triples
};

inline double triangle_area(const Point2& a, const Point2& b, const Point2& c) {
    return std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2.0;
}

inline double triangle_perimeter(const Point2& a, const Point2& b, const Point2& c) {
    return point_distance(a, b) + point_distance(b, c) + point_distance(c, a);
}

namespace detail {

struct Circumcircle {
    double cx, cy, r2;
    bool valid;
};

inline Circumcircle circumcircle(const Point2& a, const Point2& b, const Point2& c) {
    // long double accumulation keeps the predicate stable for the
    // near-cocircular cases the 1e-9 relative tolerance has to resolve
    const long double ax = a.x, ay = a.y, bx = b.x, by = b.y, cx = c.x, cy = c.y;
    const long double d = 2.0L * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (d == 0.0L) return {0, 0, 0, false};
    const long double a2 = ax * ax + ay * ay;
    const long double b2 = bx * bx + by * by;
    const long double c2 = cx * cx + cy * cy;
    const long double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const long double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    const long double r2 = (ax - ux) * (ax - ux) + (ay - uy) * (ay - uy);
    return {static_cast<double>(ux), static_cast<double>(uy), static_cast<double>(r2), true};
}

// Determinant incircle predicate in long double. Unlike the explicit
// center/radius form, the determinant stays well-conditioned for sliver
// triangles whose circumcenters are far away.
inline bool incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
    const long double adx = a.x - p.x, ady = a.y - p.y;
    const long double bdx = b.x - p.x, bdy = b.y - p.y;
    const long double cdx = c.x - p.x, cdy = c.y - p.y;
    const long double det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) -
                            (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                            (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    const long double orient = (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
                               (static_cast<long double>(c.x) - a.x) * (static_cast<long double>(b.y) - a.y);
    return orient > 0 ? det > 0 : det < 0;
}

// true when all points lie within eps of one line
inline bool all_collinear(const std::vector<Point2>& pts, double eps = 1e-9) {
    if (pts.size() < 3) return true;
    // anchor on the two farthest-apart points for a stable direction
    std::size_t ia = 0, ib = 1;
    double best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d = point_distance(pts[i], pts[j]);
            if (d > best) { best = d; ia = i; ib = j; }
        }
    if (best == 0) return true;
    const double ux = (pts[ib].x - pts[ia].x) / best;
    const double uy = (pts[ib].y - pts[ia].y) / best;
    for (const Point2& p : pts) {
        const double off = std::abs((p.x - pts[ia].x) * uy - (p.y - pts[ia].y) * ux);
        if (off > eps * std::max(1.0, best)) return false;
    }
    return true;
}

} // namespace detail

// Bowyer-Watson incremental Delaunay triangulation. Points are inserted in
// canonical (x, y) order so the triangle set does not depend on the caller's
// point ordering. Indices refer to the input `points` vector.
inline Triangulation delaunay(const std::vector<Point2>& points) {
    const std::size_t n = points.size();
    if (n < 3) throw TooFewPoints("delaunay: need at least 3 points");
    if (detail::all_collinear(points))
        throw DegenerateCollinear("delaunay: all points collinear");

    // canonical insertion order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& a = points[static_cast<std::size_t>(i)];
        const auto& b = points[static_cast<std::size_t>(j)];
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    double minx = points[0].x, maxx = points[0].x, miny = points[0].y, maxy = points[0].y;
    for (const Point2& p : points) {
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
    const double span = std::max({maxx - minx, maxy - miny, 1.0});
    const double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
    // The super-triangle must lie outside the circumcircle of every real
    // Delaunay triangle, and near-collinear hull triples have enormous
    // circumradii, so the vertices go very far out. The long double
    // predicate keeps the mixed-scale determinants stable.
    const double far = 1e8 * span;
    std::vector<Point2> verts(points);
    const int s0 = static_cast<int>(n), s1 = s0 + 1, s2 = s0 + 2;
    verts.push_back({cx - 3 * far, cy - far});
    verts.push_back({cx + 3 * far, cy - far});
    verts.push_back({cx, cy + 3 * far});

    struct Tri {
        int a, b, c;
    };
    auto make_tri = [](int a, int b, int c) { return Tri{a, b, c}; };

    std::vector<Tri> tris{make_tri(s0, s1, s2)};
    for (int idx : order) {
        const Point2& p = verts[static_cast<std::size_t>(idx)];
        // collect edges of the cavity (triangles whose circumcircle holds p)
        std::vector<std::pair<int, int>> edges;
        std::vector<Tri> kept;
        kept.reserve(tris.size());
        for (const Tri& t : tris) {
            if (detail::incircle(verts[static_cast<std::size_t>(t.a)],
                                 verts[static_cast<std::size_t>(t.b)],
                                 verts[static_cast<std::size_t>(t.c)], p)) {
                edges.emplace_back(t.a, t.b);
                edges.emplace_back(t.b, t.c);
                edges.emplace_back(t.c, t.a);
            } else {
                kept.push_back(t);
            }
        }
        // boundary edges appear once; shared cavity edges appear twice
        for (auto& e : edges)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges.begin(), edges.end());
        std::vector<std::pair<int, int>> boundary;
        for (std::size_t i = 0; i < edges.size();) {
            std::size_t j = i;
            while (j < edges.size() && edges[j] == edges[i]) ++j;
            if (j - i == 1) boundary.push_back(edges[i]);
            i = j;
        }
        tris = std::move(kept);
        for (const auto& [a, b] : boundary) tris.push_back(make_tri(a, b, idx));
    }

    Triangulation result;
    for (const Tri& t : tris) {
        if (t.a >= s0 || t.b >= s0 || t.c >= s0) continue; // super-triangle incident
        std::array<int, 3> tri{t.a, t.b, t.c};
        std::sort(tri.begin(), tri.end());
        if (triangle_area(points[static_cast<std::size_t>(tri[0])],
                          points[static_cast<std::size_t>(tri[1])],
                          points[static_cast<std::size_t>(tri[2])]) <= 1e-12)
            continue;
        result.triangles.push_back(tri);
    }
    std::sort(result.triangles.begin(), result.triangles.end());
    return result;
}

struct SpanningTree {
    std::vector<std::tuple<int, int, double>> edges; // (i, j, weight), i < j
    double total_weight = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(std::size_t n) : parent(n), rank_(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)])
            rank_[static_cast<std::size_t>(a)]++;
        return true;
    }
};

} // namespace detail

// Kruskal over the complete Euclidean graph. Equal-weight ties broken by
// (i, j) lexicographic order.
inline SpanningTree mst(const std::vector<Point2>& points) {
    const std::size_t n = points.size();
    if (n < 2) throw TooFewPoints("mst: need at least 2 points");

    std::vector<std::tuple<double, int, int>> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(point_distance(points[i], points[j]), static_cast<int>(i),
                               static_cast<int>(j));
    std::sort(edges.begin(), edges.end());

    detail::UnionFind uf(n);
    SpanningTree tree;
    for (const auto& [w, i, j] : edges) {
        if (uf.unite(i, j)) {
            tree.edges.emplace_back(i, j, w);
            tree.total_weight += w;
            if (tree.edges.size() == n - 1) break;
        }
    }
    return tree;
}

} // namespace cribra

#endif
