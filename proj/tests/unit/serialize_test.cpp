#include <doctest.h>

#include "brute_force.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/report.hpp"
#include "spanlab/serialize.hpp"

using namespace spanlab;

namespace {

template <typename Oracle, typename QueryFn>
void check_round_trip(const WeightedGraph& g, Oracle built, QueryFn query) {
    std::string bytes = save_oracle(AnyOracle{built});
    AnyOracle loaded = load_oracle(bytes);
    const Oracle& back = std::get<Oracle>(loaded);
    for (auto [u, v] : random_pairs(g, 25, 12345)) {
        auto a = query(built, u, v);
        auto b = query(back, u, v);
        CHECK(a == b);
    }
    // stable bytes: saving the reloaded oracle gives the identical file
    CHECK(save_oracle(loaded) == bytes);
}

std::vector<Vertex> path_or_empty(const std::optional<PathRecord>& p) {
    return p ? p->vertices : std::vector<Vertex>{};
}

}  // namespace

TEST_CASE("tz oracle round trips with identical answers") {
    WeightedGraph g = random_connected_graph(80, 180, 7, 3);
    check_round_trip(g, build_tz(g, 3, 7), [&](const TZOracle& o, Vertex u, Vertex v) {
        return path_or_empty(o.query(g, u, v));
    });
}

TEST_CASE("hopset parts round trip") {
    WeightedGraph g = random_connected_graph(70, 160, 5, 5);
    HopsetParts parts = build_hopset(g, 2, 4, 0.5, 9);
    std::string bytes = save_oracle(AnyOracle{parts});
    HopsetParts back = std::get<HopsetParts>(load_oracle(bytes));
    CHECK(back.edges.size() == parts.edges.size());
    CHECK(back.h1_count == parts.h1_count);
    CHECK(back.h3_count == parts.h3_count);
    // preserver queries answer identically
    for (const HopsetEdge& e : parts.edges) {
        if (e.part == HopsetPart::H3) continue;
        CHECK(preserver_path(parts, e.u, e.v).vertices ==
              preserver_path(back, e.u, e.v).vertices);
    }
}

TEST_CASE("pairwise oracle (v2) round trips with nested structures") {
    WeightedGraph g = random_connected_graph(90, 200, 7, 7);
    auto raw = random_pairs(g, 40, 11);
    PairwiseOracle o = pairwise_v2(g, PairSet::from_pairs(raw), 2, 4, 0.5, 13);
    std::string bytes = save_oracle(AnyOracle{o});
    PairwiseOracle back = std::get<PairwiseOracle>(load_oracle(bytes));
    for (auto [u, v] : raw) CHECK(o.query(g, u, v).vertices == back.query(g, u, v).vertices);
    CHECK(save_oracle(AnyOracle{back}) == bytes);
}

TEST_CASE("subset, sourcewise and prioritized oracles round trip") {
    WeightedGraph g = random_connected_graph(100, 220, 7, 17);
    std::vector<Vertex> A{3, 17, 31, 44, 59, 72, 88};
    SourcewiseOracle sw = sourcewise_spanner(g, subset_spanner(g, A, 2, 19));
    std::string bytes = save_oracle(AnyOracle{sw});
    SourcewiseOracle sw2 = std::get<SourcewiseOracle>(load_oracle(bytes));
    for (Vertex v = 0; v < g.n(); v += 9)
        for (Vertex a : A)
            if (v != a)
                CHECK(sw.query(g, v, a).vertices == sw2.query(g, v, a).vertices);

    PrioritizedOracle po =
        prioritized_spanner(g, random_ranking(g.n(), 23), PrefixPreset::Pow2, 0, 29);
    std::string pb = save_oracle(AnyOracle{po});
    PrioritizedOracle po2 = std::get<PrioritizedOracle>(load_oracle(pb));
    for (auto [u, v] : random_pairs(g, 30, 31))
        CHECK(po.query(g, u, v).path.vertices == po2.query(g, u, v).path.vertices);
    CHECK(save_oracle(AnyOracle{po2}) == pb);
}

TEST_CASE("cluster oracles round trip") {
    WeightedGraph unit = random_connected_graph(80, 170, 1, 37);
    UnweightedPrdo up = build_unweighted_prdo(unit, 2, 41);
    check_round_trip(unit, up, [&](const UnweightedPrdo& o, Vertex u, Vertex v) {
        return path_or_empty(o.query(unit, u, v));
    });

    WeightedGraph wg = random_connected_graph(80, 170, 9, 43);
    WeightedPrdo wp = build_weighted_prdo(wg, 8, 47);
    check_round_trip(wg, wp, [&](const WeightedPrdo& o, Vertex u, Vertex v) {
        return path_or_empty(o.query(wg, u, v));
    });
}

TEST_CASE("corrupt files are rejected") {
    CHECK_THROWS(load_oracle("garbage"));
    WeightedGraph g = random_connected_graph(20, 40, 3, 51);
    std::string bytes = save_oracle(AnyOracle{build_tz(g, 2, 1)});
    bytes[0] = 'X';
    CHECK_THROWS(load_oracle(bytes));
    std::string truncated = save_oracle(AnyOracle{build_tz(g, 2, 1)}).substr(0, 40);
    CHECK_THROWS(load_oracle(truncated));
}

TEST_CASE("size ledger is itemized and additive") {
    WeightedGraph g = random_connected_graph(60, 130, 5, 53);
    TZOracle tz = build_tz(g, 2, 55);
    auto j = size_ledger(AnyOracle{tz});
    CHECK(j["kind"] == "tz");
    CHECK(j["total_words"].get<size_t>() ==
          j["pivot_table_words"].get<size_t>() + j["bunch_words"].get<size_t>() +
              j["cluster_tree_words"].get<size_t>());

    PairwiseOracle empty = exact_preserver(g, PairSet{});
    auto je = size_ledger(AnyOracle{empty});
    CHECK(je["pair_path_words"] == 0);

    PrioritizedOracle po =
        prioritized_spanner(g, random_ranking(g.n(), 57), PrefixPreset::Pow2, 0, 59);
    auto jp = size_ledger(AnyOracle{po});
    size_t total = jp["f_inverse_table_words"].get<size_t>() +
                   jp["ranking_words"].get<size_t>() +
                   jp["fallback"]["total_words"].get<size_t>();
    for (const auto& prefix : jp["prefixes"]) total += prefix["total_words"].get<size_t>();
    CHECK(jp["total_words"].get<size_t>() == total);
}
