#include <catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "cribra/geometry.hpp"

using namespace cribra;

namespace {

std::vector<Point2> random_points(std::size_t n, std::uint64_t seed, double span = 100.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(0.0, span);
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {d(rng), d(rng)};
    return pts;
}

// brute-force minimum spanning tree weight by Prüfer-sequence enumeration
// of all n^(n-2) labeled trees
double prufer_min_tree_weight(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 2) return point_distance(pts[0], pts[1]);
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        // decode the Prufer sequence into tree edges
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int v : seq) degree[static_cast<std::size_t>(v)]++;
        std::vector<int> deg = degree;
        double w = 0;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        for (int v : seq) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            w += point_distance(pts[static_cast<std::size_t>(leaf)],
                                pts[static_cast<std::size_t>(v)]);
            if (--deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        }
        const int a = *leaves.begin();
        const int b = *std::next(leaves.begin());
        w += point_distance(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
        best = std::min(best, w);

        // next sequence
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        seq[static_cast<std::size_t>(i)]++;
    }
    return best;
}

// convex hull size computed independently (gift wrapping)
int hull_size(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    int start = 0;
    for (int i = 1; i < n; ++i)
        if (pts[static_cast<std::size_t>(i)].x < pts[static_cast<std::size_t>(start)].x ||
            (pts[static_cast<std::size_t>(i)].x == pts[static_cast<std::size_t>(start)].x &&
             pts[static_cast<std::size_t>(i)].y < pts[static_cast<std::size_t>(start)].y))
            start = i;
    int count = 0, cur = start;
    do {
        ++count;
        int next = (cur + 1) % n;
        for (int i = 0; i < n; ++i) {
            const Point2& a = pts[static_cast<std::size_t>(cur)];
            const Point2& b = pts[static_cast<std::size_t>(next)];
            const Point2& c = pts[static_cast<std::size_t>(i)];
            const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
            if (cross < 0) next = i;
        }
        cur = next;
    } while (cur != start && count <= n);
    return count;
}

void check_empty_circumcircle(const std::vector<Point2>& pts, const Triangulation& tri) {
    for (const auto& t : tri.triangles) {
        const Point2& a = pts[static_cast<std::size_t>(t[0])];
        const Point2& b = pts[static_cast<std::size_t>(t[1])];
        const Point2& c = pts[static_cast<std::size_t>(t[2])];
        const auto cc = detail::circumcircle(a, b, c);
        REQUIRE(cc.valid);
        const double r = std::sqrt(cc.r2);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (static_cast<int>(i) == t[0] || static_cast<int>(i) == t[1] ||
                static_cast<int>(i) == t[2])
                continue;
            const double d = std::hypot(pts[i].x - cc.cx, pts[i].y - cc.cy);
            CHECK(d >= r * (1.0 - 1e-9));
        }
    }
}

} // namespace

TEST_CASE("single right triangle") {
    const std::vector<Point2> pts = {{0, 0}, {1, 0}, {0, 1}};
    const Triangulation tri = delaunay(pts);
    REQUIRE(tri.triangles.size() == 1);
    const auto& t = tri.triangles[0];
    CHECK(triangle_area(pts[0], pts[1], pts[2]) == Catch::Approx(0.5));
    CHECK(triangle_perimeter(pts[static_cast<std::size_t>(t[0])],
                             pts[static_cast<std::size_t>(t[1])],
                             pts[static_cast<std::size_t>(t[2])]) ==
          Catch::Approx(2.0 + std::sqrt(2.0)));
}

TEST_CASE("unit square splits into two triangles of total area 1") {
    const std::vector<Point2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const Triangulation tri = delaunay(pts);
    REQUIRE(tri.triangles.size() == 2);
    double total = 0;
    for (const auto& t : tri.triangles)
        total += triangle_area(pts[static_cast<std::size_t>(t[0])],
                               pts[static_cast<std::size_t>(t[1])],
                               pts[static_cast<std::size_t>(t[2])]);
    CHECK(total == Catch::Approx(1.0));
}

TEST_CASE("delaunay errors on degenerate input") {
    CHECK_THROWS_AS(delaunay({{0, 0}, {1, 1}}), TooFewPoints);
    CHECK_THROWS_AS(delaunay({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateCollinear);
}

TEST_CASE("triangle count identity and circumcircle property on random sets") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto pts = random_points(50, 1000 + seed);
        const Triangulation tri = delaunay(pts);
        const int h = hull_size(pts);
        CHECK(static_cast<int>(tri.triangles.size()) == 2 * 50 - 2 - h);
        check_empty_circumcircle(pts, tri);
    }
}

TEST_CASE("delaunay triangle set is insertion-order independent") {
    const auto pts = random_points(30, 424242);
    const Triangulation base = delaunay(pts);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        // shuffle points, triangulate, map indices back
        std::vector<int> perm(pts.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Point2> shuffled(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            shuffled[i] = pts[static_cast<std::size_t>(perm[i])];
        const Triangulation tri = delaunay(shuffled);
        std::vector<std::array<int, 3>> mapped;
        for (const auto& t : tri.triangles) {
            std::array<int, 3> m{perm[static_cast<std::size_t>(t[0])],
                                 perm[static_cast<std::size_t>(t[1])],
                                 perm[static_cast<std::size_t>(t[2])]};
            std::sort(m.begin(), m.end());
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == base.triangles);
    }
}

TEST_CASE("every triangle has nonzero area") {
    const auto pts = random_points(40, 5150);
    for (const auto& t : delaunay(pts).triangles)
        CHECK(triangle_area(pts[static_cast<std::size_t>(t[0])],
                            pts[static_cast<std::size_t>(t[1])],
                            pts[static_cast<std::size_t>(t[2])]) > 1e-12);
}

TEST_CASE("mst of two points is the single edge") {
    const SpanningTree t = mst({{0, 0}, {3, 4}});
    REQUIRE(t.edges.size() == 1);
    CHECK(t.total_weight == Catch::Approx(5.0));
}

TEST_CASE("mst of a collinear chain uses nearest-neighbor edges") {
    std::vector<Point2> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({2.0 * i, 0});
    const SpanningTree t = mst(pts);
    REQUIRE(t.edges.size() == 4);
    CHECK(t.total_weight == Catch::Approx(8.0));
    for (const auto& [i, j, w] : t.edges) CHECK(w == Catch::Approx(2.0));
}

TEST_CASE("mst rejects a single point") {
    CHECK_THROWS_AS(mst({{1, 1}}), TooFewPoints);
}

TEST_CASE("kruskal equals the Prufer brute-force minimum on small sets") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 6; // 2..7
        const auto pts = random_points(n, 900 + seed);
        const SpanningTree t = mst(pts);
        CHECK(t.total_weight == Catch::Approx(prufer_min_tree_weight(pts)).margin(1e-9));
    }
}

TEST_CASE("euclidean MST is a subset of delaunay edges by weight") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto pts = random_points(25, 37 + seed);
        const SpanningTree full = mst(pts);

        // restricted Kruskal over Delaunay edges only
        const Triangulation tri = delaunay(pts);
        std::set<std::pair<int, int>> dedges;
        for (const auto& t : tri.triangles) {
            dedges.insert({t[0], t[1]});
            dedges.insert({t[1], t[2]});
            dedges.insert({t[0], t[2]});
        }
        std::vector<std::tuple<double, int, int>> edges;
        for (const auto& [i, j] : dedges)
            edges.emplace_back(point_distance(pts[static_cast<std::size_t>(i)],
                                              pts[static_cast<std::size_t>(j)]),
                               i, j);
        std::sort(edges.begin(), edges.end());
        detail::UnionFind uf(pts.size());
        double restricted = 0;
        std::size_t used = 0;
        for (const auto& [w, i, j] : edges)
            if (uf.unite(i, j)) { restricted += w; ++used; }
        REQUIRE(used == pts.size() - 1);
        CHECK(full.total_weight == Catch::Approx(restricted).margin(1e-9));
    }
}
