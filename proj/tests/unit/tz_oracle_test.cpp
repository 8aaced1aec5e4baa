#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "brute_force.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/tz_oracle.hpp"

using namespace spanlab;
namespace bt = spanlab::testing;

namespace {

// definitional bunch/cluster checks against ground-truth distances
void check_bunch_invariants(const WeightedGraph& g, const TZOracle& o) {
    auto bf = bt::bellman_ford_all_pairs(g);
    const BunchTable& t = o.table;
    int depth = o.hierarchy.depth();
    // pivots are nearest level vertices
    for (int i = 0; i < depth; ++i) {
        for (Vertex v = 0; v < g.n(); ++v) {
            Vertex p = t.pivot[size_t(i)][size_t(v)];
            if (p == -1) continue;
            double best = -1.0;
            for (Vertex a : o.hierarchy.levels[size_t(i)]) {
                double d = bf[size_t(v)][size_t(a)];
                if (d == bt::kUnreached) continue;
                if (best < 0 || d < best) best = d;
            }
            CHECK(t.pivot_dist[size_t(i)][size_t(v)] == doctest::Approx(best));
        }
    }
    // duality: u in C(v) iff v in B(u), and cluster paths are exact
    size_t bunch_total = 0, cluster_total = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        bunch_total += t.bunch[size_t(v)].size();
        cluster_total += t.cluster[size_t(v)].size();
        for (const auto& [member, entry] : t.cluster[size_t(v)]) {
            CHECK(t.in_bunch(member, v));
            CHECK(entry.dist == doctest::Approx(bf[size_t(member)][size_t(v)]));
            PathRecord p = t.cluster_path(v, member);
            if (member != v) {
                CHECK(p.total_weight == doctest::Approx(entry.dist));
                CHECK(p.vertices.front() == member);
                CHECK(p.vertices.back() == v);
            }
        }
        for (const auto& [member, d] : t.bunch[size_t(v)])
            CHECK(t.cluster_entry(member, v) != nullptr);
    }
    CHECK(bunch_total == cluster_total);  // sum |C(w)| == sum |B(u)|

    // strict bunch threshold: v in B_j(u) iff d(u,v) < d(u, p_{j+1}(u))
    for (Vertex u = 0; u < g.n(); ++u) {
        for (const auto& [v, d] : t.bunch[size_t(u)]) {
            int j = t.level_of[size_t(v)];
            if (j + 1 < depth) {
                CHECK(d < t.pivot_dist[size_t(j + 1)][size_t(u)]);
            }
        }
    }
}

}  // namespace

TEST_CASE("k = 1 degenerates to an exact oracle") {
    WeightedGraph g = random_connected_graph(40, 80, 7, 2);
    TZOracle o = build_tz(g, 1, 99);
    CHECK(o.hierarchy.depth() == 1);  // A_1 is empty
    auto bf = bt::bellman_ford_all_pairs(g);
    for (Vertex u = 0; u < g.n(); ++u) {
        // every bunch is all of V
        CHECK(o.table.bunch[size_t(u)].size() == size_t(g.n()));
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto p = o.query(g, u, v);
            REQUIRE(p.has_value());
            CHECK(p->total_weight == doctest::Approx(bf[size_t(u)][size_t(v)]));
        }
    }
}

TEST_CASE("u == v gives the empty path") {
    WeightedGraph g = random_connected_graph(20, 30, 3, 4);
    TZOracle o = build_tz(g, 2, 5);
    auto p = o.query(g, 7, 7);
    REQUIRE(p.has_value());
    CHECK(p->vertices.empty());
}

TEST_CASE("k = 2 stretch stays within 3 on a 100-vertex random graph") {
    WeightedGraph g = random_connected_graph(100, 250, 11, 31);
    TZOracle o = build_tz(g, 2, 7);
    auto bf = bt::bellman_ford_all_pairs(g);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto p = o.query(g, u, v);
            REQUIRE(p.has_value());
            double d = bf[size_t(u)][size_t(v)];
            CHECK(p->total_weight >= d - 1e-9);
            CHECK(p->total_weight <= 3.0 * d + 1e-9);
            CHECK(!check_walk(g, *p, u, v).has_value());
        }
}

TEST_CASE("k = 3 on 200 vertices: max stretch over all pairs is at most 5") {
    WeightedGraph g = random_connected_graph(200, 500, 13, 17);
    TZOracle o = build_tz(g, 3, 23);
    auto bf = bt::bellman_ford_all_pairs(g);
    double worst = 0.0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto p = o.query(g, u, v);
            REQUIRE(p.has_value());
            worst = std::max(worst, p->total_weight / bf[size_t(u)][size_t(v)]);
        }
    CHECK(worst <= 5.0 + 1e-9);
}

TEST_CASE("bunch and cluster invariants hold (weighted and unit graphs)") {
    WeightedGraph weighted = random_connected_graph(60, 120, 9, 41);
    check_bunch_invariants(weighted, build_tz(weighted, 2, 5));
    WeightedGraph unit = random_connected_graph(60, 150, 1, 42);
    check_bunch_invariants(unit, build_tz(unit, 3, 6));
}

TEST_CASE("every query answer stays inside the underlying spanner") {
    WeightedGraph g = random_connected_graph(80, 200, 5, 51);
    TZOracle o = build_tz(g, 3, 13);
    std::vector<char> in_spanner(static_cast<size_t>(g.m()), 0);
    for (EdgeId e : o.spanner_edges) in_spanner[size_t(e)] = 1;
    for (auto [u, v] : random_pairs(g, 300, 77)) {
        auto p = o.query(g, u, v);
        REQUIRE(p.has_value());
        for (size_t i = 0; i + 1 < p->vertices.size(); ++i) {
            auto e = g.find_edge(p->vertices[i], p->vertices[i + 1]);
            REQUIRE(e.has_value());
            CHECK(in_spanner[size_t(*e)] == 1);
        }
    }
}

TEST_CASE("pivot consistency along stored pivot-forest paths") {
    WeightedGraph g = random_connected_graph(80, 200, 1, 61);  // unit weights stress ties
    TZOracle o = build_tz(g, 3, 3);
    for (int i = 0; i < o.hierarchy.depth(); ++i) {
        for (Vertex u = 0; u < g.n(); ++u) {
            if (o.table.pivot[size_t(i)][size_t(u)] == -1) continue;
            PathRecord p = o.table.pivot_path(i, u);
            for (Vertex x : p.vertices) {
                CHECK(o.table.pivot[size_t(i)][size_t(x)] ==
                      o.table.pivot[size_t(i)][size_t(u)]);
            }
            if (!p.vertices.empty()) {
                CHECK(p.vertices.back() == o.table.pivot[size_t(i)][size_t(u)]);
                CHECK(p.total_weight ==
                      doctest::Approx(o.table.pivot_dist[size_t(i)][size_t(u)]));
            }
        }
    }
}

TEST_CASE("per-component construction on a disconnected graph") {
    WeightedGraph g = load_graph("n 6\n0 1 1\n1 2 1\n3 4 1\n4 5 1\n");
    TZOracle o = build_tz(g, 2, 9);
    CHECK(o.query(g, 0, 2).has_value());
    CHECK(o.query(g, 3, 5).has_value());
    CHECK(!o.query(g, 0, 5).has_value());
}

TEST_CASE("size scaling constant is reported sanely") {
    WeightedGraph g = random_connected_graph(150, 400, 7, 71);
    int k = 2;
    TZOracle o = build_tz(g, k, 15);
    double bound_scale = double(k) * std::pow(double(g.n()), 1.0 + 1.0 / double(k));
    double c = double(o.spanner_edges.size()) / bound_scale;
    CHECK(c > 0.0);
    CHECK(c < 10.0);  // sanity: the fitted constant is small at this scale
}

TEST_CASE("emulator: two points reduce to the single exact edge") {
    WeightedGraph g = random_connected_graph(30, 60, 5, 81);
    ExactOracle exact(g);
    std::vector<Vertex> pts{3, 19};
    std::vector<std::vector<double>> dist{{0.0, exact.distance(3, 19)},
                                          {exact.distance(19, 3), 0.0}};
    TZEmulator em = build_tz_emulator(pts, dist, 2, 4);
    CHECK(em.emulator.m() == 1);
    auto p = em.query(3, 19);
    REQUIRE(p.has_value());
    CHECK(p->total_weight == doctest::Approx(exact.distance(3, 19)));
}

TEST_CASE("emulator: k = 1 is the complete graph on A and exact") {
    WeightedGraph g = random_connected_graph(40, 90, 5, 83);
    ExactOracle exact(g);
    std::vector<Vertex> pts{1, 5, 9, 13, 22, 31};
    size_t m = pts.size();
    std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j) dist[i][j] = exact.distance(pts[i], pts[j]);
    TZEmulator em = build_tz_emulator(pts, dist, 1, 4);
    CHECK(em.emulator.m() == int(m * (m - 1) / 2));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto p = em.query(pts[i], pts[j]);
            REQUIRE(p.has_value());
            CHECK(p->total_weight == doctest::Approx(dist[i][j]));
        }
}

TEST_CASE("emulator rejects non-metric input") {
    std::vector<Vertex> pts{0, 1, 2};
    std::vector<std::vector<double>> bad{{0, 1, 10}, {1, 0, 1}, {10, 1, 0}};
    CHECK_THROWS_WITH_AS(build_tz_emulator(pts, bad, 2, 1), doctest::Contains("triangle"),
                         std::invalid_argument);
}

TEST_CASE("emulator stretch on a 20-point subset stays within 2k-1") {
    WeightedGraph g = random_connected_graph(200, 500, 9, 91);
    ExactOracle exact(g);
    std::vector<Vertex> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(Vertex(i * 10 + 3));
    size_t m = pts.size();
    std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j) dist[i][j] = exact.distance(pts[i], pts[j]);
    TZEmulator em = build_tz_emulator(pts, dist, 2, 12);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto p = em.query(pts[i], pts[j]);
            REQUIRE(p.has_value());
            CHECK(p->total_weight <= 3.0 * dist[i][j] + 1e-9);
            // emulator edge weights are exact distances
            for (size_t s = 0; s + 1 < p->vertices.size(); ++s) {
                Vertex a = p->vertices[s], b = p->vertices[s + 1];
                CHECK(exact.distance(a, b) > 0.0);
            }
        }
}
