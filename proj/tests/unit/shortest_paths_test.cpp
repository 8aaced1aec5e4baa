#include <doctest.h>

#include <cmath>

#include "brute_force.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/shortest_paths.hpp"

using namespace spanlab;
namespace bt = spanlab::testing;

TEST_CASE("tie-break prefers the smaller predecessor id") {
    // y=0, x=1, z=2: both x-z routes weigh 3; the route through y wins
    // because y has the smaller id among z's optimal predecessors.
    WeightedGraph g = load_graph("n 3\n1 0 1\n0 2 2\n1 2 3\n");
    auto weights = bt::all_simple_path_weights(g, 1, 2);
    REQUIRE(weights.size() == 2);  // exactly the two routes
    CHECK(weights[0] == doctest::Approx(3.0));
    CHECK(weights[1] == doctest::Approx(3.0));

    PathRecord p = shortest_path(g, 1, 2);
    CHECK(p.total_weight == doctest::Approx(3.0));
    CHECK(p.vertices == std::vector<Vertex>{1, 0, 2});
    // the independent brute-force oracle agrees
    auto q = bt::canonical_path_brute(g, 1, 2);
    CHECK(q->vertices == p.vertices);
}

TEST_CASE("u == v gives the empty path") {
    WeightedGraph g = load_graph("n 2\n0 1 1\n");
    PathRecord p = shortest_path(g, 0, 0);
    CHECK(p.vertices.empty());
    CHECK(p.total_weight == 0.0);
}

TEST_CASE("adjacent pairs in the Petersen graph are at distance 1") {
    WeightedGraph g = petersen_graph();
    for (const Edge& e : g.edges()) {
        CHECK(shortest_path(g, e.u, e.v).total_weight == doctest::Approx(1.0));
        CHECK(shortest_path(g, e.u, e.v).hop_count() == 1);
    }
}

TEST_CASE("unreachable pairs are a first-class result") {
    WeightedGraph g = load_graph("n 4\n0 1 1\n2 3 1\n");
    CHECK(!try_shortest_path(g, 0, 3).has_value());
    CHECK(try_shortest_path(g, 0, 1).has_value());
}

TEST_CASE("dijkstra agrees with Bellman-Ford on all pairs") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        WeightedGraph g = random_connected_graph(60, 120, 9, seed);
        auto bf = bt::bellman_ford_all_pairs(g);
        for (Vertex u = 0; u < g.n(); ++u) {
            SPTree t = dijkstra(g, u);
            for (Vertex v = 0; v < g.n(); ++v) {
                REQUIRE(t.reached(v));
                CHECK(t.distance(v) == doctest::Approx(bf[size_t(u)][size_t(v)]));
            }
        }
    }
}

TEST_CASE("repeated calls return the identical path") {
    WeightedGraph g = random_connected_graph(50, 100, 4, 11);  // small weights force ties
    for (Vertex v = 1; v < 20; ++v) {
        PathRecord a = shortest_path(g, 0, v);
        PathRecord b = shortest_path(g, 0, v);
        CHECK(a.vertices == b.vertices);
    }
}

TEST_CASE("bounded-hop path basics") {
    // path u-x-v with weights 1,1 plus a 2-weight direct hop edge
    WeightedGraph g = load_graph("n 3\n0 1 1\n1 2 1\n");
    std::vector<ExtraEdge> extra{{0, 2, 2.0}};
    auto one = bounded_hop_path(g, extra, 0, 2, 1);
    REQUIRE(one.has_value());
    CHECK(one->path.total_weight == doctest::Approx(2.0));
    CHECK(one->path.hop_count() == 1);
    CHECK(one->edge_from_extra == std::vector<uint8_t>{1});

    auto two = bounded_hop_path(g, {}, 0, 2, 2);
    REQUIRE(two.has_value());
    CHECK(two->path.total_weight == doctest::Approx(2.0));
    CHECK(two->path.vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(two->edge_from_extra == std::vector<uint8_t>{0, 0});
}

TEST_CASE("beta = 1 over the complete distance graph is exact everywhere") {
    WeightedGraph g = random_connected_graph(30, 40, 7, 5);
    ExactOracle exact(g);
    std::vector<ExtraEdge> extra;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) extra.push_back({u, v, exact.distance(u, v)});
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto hp = bounded_hop_path(g, extra, u, v, 1);
            REQUIRE(hp.has_value());
            CHECK(hp->path.total_weight == doctest::Approx(exact.distance(u, v)));
        }
}

TEST_CASE("bounded-hop weight is non-increasing in beta and hits shortest_path at n-1") {
    WeightedGraph g = random_connected_graph(25, 45, 6, 9);
    ExactOracle exact(g);
    std::vector<std::pair<std::pair<Vertex, Vertex>, double>> no_extra;
    for (auto [u, v] : random_pairs(g, 15, 3)) {
        double prev = std::numeric_limits<double>::infinity();
        for (int beta = 1; beta < g.n(); ++beta) {
            auto hp = bounded_hop_path(g, {}, u, v, beta);
            double w = hp ? hp->path.total_weight : std::numeric_limits<double>::infinity();
            CHECK(w <= prev + 1e-12);
            if (hp) {
                CHECK(hp->path.hop_count() <= beta);
                double brute = bt::bounded_hop_weight_brute(g, no_extra, u, v, beta);
                CHECK(w == doctest::Approx(brute));
            }
            prev = w;
        }
        CHECK(prev == doctest::Approx(exact.distance(u, v)));
    }
}

TEST_CASE("multi-source search claims the smallest-id nearest source") {
    WeightedGraph g = random_connected_graph(40, 80, 1, 21);  // unit weights, many ties
    std::vector<Vertex> sources{3, 17, 29};
    MultiSourceTree t = multi_source_dijkstra(g, sources);
    auto bf3 = bt::bellman_ford(g, 3);
    auto bf17 = bt::bellman_ford(g, 17);
    auto bf29 = bt::bellman_ford(g, 29);
    for (Vertex v = 0; v < g.n(); ++v) {
        double d3 = bf3[size_t(v)], d17 = bf17[size_t(v)], d29 = bf29[size_t(v)];
        double best = std::min({d3, d17, d29});
        CHECK(t.dist[size_t(v)] == doctest::Approx(best));
        Vertex expect = (d3 == best) ? 3 : (d17 == best ? 17 : 29);
        CHECK(t.owner[size_t(v)] == expect);
        // walking the links reaches the owner with exactly the claimed weight
        PathRecord p = t.path_to_owner(v);
        if (v != t.owner[size_t(v)]) {
            CHECK(p.vertices.front() == v);
            CHECK(p.vertices.back() == t.owner[size_t(v)]);
        }
    }
}

TEST_CASE("path counting: unique vs multiple shortest paths") {
    WeightedGraph c4 = load_graph("n 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
    PathCount pc = count_shortest_paths(c4, 0);
    CHECK(pc.count[2] == 2);  // both ways around the square
    CHECK(pc.count[1] == 1);
    WeightedGraph path = load_graph("n 3\n0 1 1\n1 2 1\n");
    PathCount pc2 = count_shortest_paths(path, 0);
    CHECK(pc2.count[2] == 1);
}
