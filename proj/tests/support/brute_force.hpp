#pragma once

// Independent ground-truth oracles for the test suites. Everything here is
// deliberately naive (Bellman-Ford relaxation sweeps, explicit DAG walks) and
// shares no code with the Dijkstra-based implementation it checks.

#include <optional>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab::testing {

constexpr double kUnreached = -1.0;

// All-pairs distances by |V|-1 rounds of edge relaxations per source.
// dist[u][v] == kUnreached when v is not reachable from u.
std::vector<std::vector<double>> bellman_ford_all_pairs(const WeightedGraph& g);

// Single-source Bellman-Ford sweep.
std::vector<double> bellman_ford(const WeightedGraph& g, Vertex source);

// The canonical shortest path under the "smaller predecessor id wins" rule,
// derived from Bellman-Ford distances only: walk back from v, always taking
// the smallest-id optimal predecessor.
std::optional<PathRecord> canonical_path_brute(const WeightedGraph& g, Vertex u, Vertex v);

// Minimum weight over <= beta hop walks in g + extra, by dynamic programming
// over hop counts. Returns kUnreached when no such walk exists.
double bounded_hop_weight_brute(const WeightedGraph& g,
                                const std::vector<std::pair<std::pair<Vertex, Vertex>, double>>& extra,
                                Vertex u, Vertex v, int beta);

// Enumerates every simple u-v path (tiny graphs only) and returns the sorted
// list of path weights.
std::vector<double> all_simple_path_weights(const WeightedGraph& g, Vertex u, Vertex v);

}  // namespace spanlab::testing
