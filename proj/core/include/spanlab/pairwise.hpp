#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/hopset.hpp"

namespace spanlab {

// Path-reporting pairwise oracle: answers stretch-bounded path queries for a
// registered pair set. Three builds share this type:
//   exact    - union of consistent shortest paths, stretch 1
//   compose  - stored bounded-hop paths over G + H, every hop edge expanded
//              through a base oracle built on the whole hopset
//   v2       - same stored paths, but H1/H2 hop edges expand through their
//              exact preserver forests and only H3 goes through a base oracle
class PairwiseOracle {
public:
    enum class Mode : uint8_t { Exact = 0, Compose = 1, V2 = 2 };

    // per stored edge: 0 = host graph edge, 1/2/3 = hopset part
    struct StoredPath {
        std::vector<Vertex> vertices;
        std::vector<uint8_t> kind;
    };

    Mode mode = Mode::Exact;
    double declared_stretch = 1.0;
    double base_stretch = 1.0;  // t in the stretch chain t * (8c+3)
    std::vector<EdgeId> spanner_edges;
    std::map<std::pair<Vertex, Vertex>, StoredPath> stored;  // canonical (min,max) keys
    std::shared_ptr<HopsetParts> hopset;        // compose/v2
    std::shared_ptr<PairwiseOracle> base;       // compose: over all of H; v2: over H3

    bool registered(Vertex u, Vertex v) const;
    // Throws for unregistered pairs ("pair not registered").
    PathRecord query(const WeightedGraph& g, Vertex u, Vertex v) const;

    size_t path_words() const;
    size_t spanner_edge_count() const { return spanner_edges.size(); }
    size_t preserver_link_words() const;  // v2 only: H1+H2 forest links
    size_t base_spanner_edge_count() const { return base ? base->spanner_edges.size() : 0; }
    size_t size_words() const;
};

using PairwiseBuilder =
    std::function<PairwiseOracle(const WeightedGraph&, const PairSet&)>;

// Union of deterministic shortest paths for the given pairs; every query is
// answered exactly. Unreachable pairs are rejected at build time.
PairwiseOracle exact_preserver(const WeightedGraph& g, const PairSet& pairs);

// Stores a minimum-weight <= beta hop path per pair over G + H and expands
// hop edges through `base_builder` applied to the hopset viewed as a pair
// set. Declared stretch: base stretch * (8c+3).
PairwiseOracle compose_hopset(const WeightedGraph& g, const PairSet& pairs,
                              std::shared_ptr<HopsetParts> parts,
                              const PairwiseBuilder& base_builder);

// The refined construction: base oracle only on H3, exact preserver forests
// answer H1/H2 hop edges.
PairwiseOracle pairwise_v2(const WeightedGraph& g, const PairSet& pairs, int c, int k, double delta,
                           uint64_t seed);

}  // namespace spanlab
