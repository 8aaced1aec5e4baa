#include <doctest.h>

#include <stdexcept>

#include <set>

#include "brute_force.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/pairwise.hpp"

using namespace spanlab;
namespace bt = spanlab::testing;

namespace {

void check_walk_in_spanner(const WeightedGraph& g, const PairwiseOracle& o, const PathRecord& p,
                           Vertex u, Vertex v) {
    CHECK(!check_walk(g, p, u, v).has_value());
    std::set<EdgeId> spanner(o.spanner_edges.begin(), o.spanner_edges.end());
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
        REQUIRE(e.has_value());
        CHECK(spanner.count(*e) == 1);
    }
}

}  // namespace

TEST_CASE("single-pair preserver is one shortest path") {
    WeightedGraph g = random_connected_graph(40, 90, 7, 3);
    ExactOracle exact(g);
    PairSet ps = PairSet::from_pairs({{5, 31}});
    PairwiseOracle o = exact_preserver(g, ps);
    CHECK(o.declared_stretch == 1.0);
    PathRecord p = o.query(g, 5, 31);
    CHECK(p.total_weight == doctest::Approx(exact.distance(5, 31)));
    CHECK(o.spanner_edges.size() == size_t(p.hop_count()));
    check_walk_in_spanner(g, o, p, 5, 31);
    // reversed query works too
    PathRecord q = o.query(g, 31, 5);
    CHECK(q.vertices.front() == 31);
    CHECK(q.total_weight == doctest::Approx(p.total_weight));
}

TEST_CASE("edge-endpoint pairs cost at most the edge weight") {
    WeightedGraph g = random_connected_graph(30, 70, 9, 5);
    std::vector<std::pair<Vertex, Vertex>> raw;
    for (const Edge& e : g.edges()) raw.emplace_back(e.u, e.v);
    PairwiseOracle o = exact_preserver(g, PairSet::from_pairs(raw));
    for (const Edge& e : g.edges())
        CHECK(o.query(g, e.u, e.v).total_weight <= e.w + 1e-9);
}

TEST_CASE("50 random pairs on n=300 answer exactly") {
    WeightedGraph g = random_connected_graph(300, 700, 11, 7);
    ExactOracle exact(g);
    auto raw = random_pairs(g, 50, 9);
    PairwiseOracle o = exact_preserver(g, PairSet::from_pairs(raw));
    for (auto [u, v] : raw) {
        PathRecord p = o.query(g, u, v);
        CHECK(p.total_weight == doctest::Approx(exact.distance(u, v)));
        check_walk_in_spanner(g, o, p, u, v);
    }
}

TEST_CASE("unreachable and unregistered pairs error out") {
    WeightedGraph g = load_graph("n 4\n0 1 1\n2 3 1\n");
    CHECK_THROWS_WITH_AS(exact_preserver(g, PairSet::from_pairs({{0, 2}})),
                         doctest::Contains("unreachable"), std::runtime_error);
    PairwiseOracle o = exact_preserver(g, PairSet::from_pairs({{0, 1}}));
    CHECK_THROWS_WITH_AS(o.query(g, 2, 3), doctest::Contains("not registered"),
                         std::runtime_error);
}

TEST_CASE("compose with an exact base: stretch within 8c+3 end to end") {
    WeightedGraph g = random_connected_graph(150, 350, 9, 11);
    ExactOracle exact(g);
    auto parts = std::make_shared<HopsetParts>(build_hopset(g, 2, 4, 0.5, 13));
    auto raw = random_pairs(g, 100, 17);
    PairwiseOracle o = compose_hopset(g, PairSet::from_pairs(raw), parts, exact_preserver);
    CHECK(o.declared_stretch == doctest::Approx(19.0));
    long long budget = parts->beta_budget();
    for (auto [u, v] : raw) {
        PathRecord p = o.query(g, u, v);
        double d = exact.distance(u, v);
        CHECK(p.total_weight >= d - 1e-9);
        CHECK(p.total_weight <= 19.0 * d + 1e-9);
        check_walk_in_spanner(g, o, p, u, v);
    }
    // per-pair stored hop count respects the budget
    for (const auto& [key, sp] : o.stored) {
        (void)key;
        CHECK(static_cast<long long>(sp.vertices.size()) - 1 <= budget);
    }
}

TEST_CASE("degenerate hopset: stored paths are single hop edges") {
    WeightedGraph g = random_connected_graph(30, 60, 5, 19);
    auto parts = std::make_shared<HopsetParts>(build_hopset(g, 2, 4, 1e-9, 23));
    REQUIRE(parts->hierarchy.depth() == 1);
    auto raw = random_pairs(g, 25, 29);
    PairwiseOracle o = compose_hopset(g, PairSet::from_pairs(raw), parts, exact_preserver);
    ExactOracle exact(g);
    for (const auto& [key, sp] : o.stored) CHECK(sp.vertices.size() == 2);
    for (auto [u, v] : raw)
        CHECK(o.query(g, u, v).total_weight == doctest::Approx(exact.distance(u, v)));
}

TEST_CASE("v2: preserver forests answer H1/H2 hops, base answers H3") {
    WeightedGraph g = random_connected_graph(150, 350, 9, 11);
    ExactOracle exact(g);
    auto raw = random_pairs(g, 100, 17);
    PairwiseOracle o = pairwise_v2(g, PairSet::from_pairs(raw), 2, 4, 0.5, 13);
    CHECK(o.declared_stretch == doctest::Approx(19.0));
    for (auto [u, v] : raw) {
        PathRecord p = o.query(g, u, v);
        double d = exact.distance(u, v);
        CHECK(p.total_weight >= d - 1e-9);
        CHECK(p.total_weight <= 19.0 * d + 1e-9);
        check_walk_in_spanner(g, o, p, u, v);
    }
}

TEST_CASE("v2 and compose answer the same pair set; H3 base never grows past full-H base") {
    WeightedGraph g = random_connected_graph(120, 280, 7, 31);
    auto raw = random_pairs(g, 80, 37);
    PairSet ps = PairSet::from_pairs(raw);
    uint64_t seed = 41;
    auto parts = std::make_shared<HopsetParts>(build_hopset(g, 2, 4, 0.5, seed));
    PairwiseOracle compose = compose_hopset(g, ps, parts, exact_preserver);
    PairwiseOracle v2 = pairwise_v2(g, ps, 2, 4, 0.5, seed);
    for (auto [u, v] : raw) {
        CHECK(compose.registered(u, v));
        CHECK(v2.registered(u, v));
    }
    // same seed, same hopset; the H3-only base preserver is a subset
    CHECK(v2.base->spanner_edges.size() <= compose.base->spanner_edges.size());
    std::set<EdgeId> full(compose.base->spanner_edges.begin(), compose.base->spanner_edges.end());
    for (EdgeId e : v2.base->spanner_edges) CHECK(full.count(e) == 1);
}

TEST_CASE("empty pair set gives an empty spanner and no storage") {
    WeightedGraph g = random_connected_graph(30, 60, 5, 43);
    PairwiseOracle o = exact_preserver(g, PairSet{});
    CHECK(o.spanner_edges.empty());
    CHECK(o.path_words() == 0);
}

TEST_CASE("stored walks may repeat vertices but remain valid walks") {
    WeightedGraph g = random_connected_graph(100, 240, 8, 47);
    auto raw = random_pairs(g, 60, 53);
    PairwiseOracle o = pairwise_v2(g, PairSet::from_pairs(raw), 2, 4, 0.5, 59);
    for (auto [u, v] : raw) {
        PathRecord p = o.query(g, u, v);
        CHECK(!check_walk(g, p, u, v).has_value());  // tours allowed, edges must exist
    }
}
