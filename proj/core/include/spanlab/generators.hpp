#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Connected random graph: a random spanning tree plus extra random edges.
// weight_max == 1 gives unit weights; otherwise weights are uniform integers
// in [1, weight_max] (integer mode keeps every verification exact).
WeightedGraph random_connected_graph(int n, int extra_edges, int weight_max, uint64_t seed);

// Random d-regular simple graph via the pairing model (rejection sampling).
// min_girth > 0 additionally rejects graphs of girth <= min_girth.
std::optional<WeightedGraph> random_regular_graph(int n, int degree, int min_girth, uint64_t seed,
                                                  int max_attempts = 2000);

// Named fixture graphs (unit weights).
WeightedGraph petersen_graph();   // (3,5)-cage, 10 vertices
WeightedGraph heawood_graph();    // (3,6)-cage, 14 vertices
WeightedGraph mcgee_graph();      // (3,7)-cage, 24 vertices

// Uniformly random permutation of the vertex ids, used as a priority ranking.
std::vector<Vertex> random_ranking(int n, uint64_t seed);

// n_pairs distinct random pairs with both endpoints in the same component.
std::vector<std::pair<Vertex, Vertex>> random_pairs(const WeightedGraph& g, int n_pairs,
                                                    uint64_t seed);

}  // namespace spanlab
