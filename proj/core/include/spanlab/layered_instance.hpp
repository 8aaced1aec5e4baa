#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Labeled layered graph: 2l+1 layers of p vertices, every edge between
// adjacent layers, and for each vertex of layer i < 2l exactly one forward
// edge per label (distinct labels leading to distinct targets). Alternating
// two labels from an input port traces a unique shortest path to an output
// port, and same-label walks from distinct inputs are vertex-disjoint.
struct LayeredBaseGraph {
    int p = 0;
    int l = 0;
    int labels = 0;
    // forward[t][u][a] = index of the layer-(t+1) vertex reached from the
    // layer-t vertex u under label a; -1 when absent (invalid instance)
    std::vector<std::vector<std::vector<int>>> forward;

    int layer_count() const { return 2 * l + 1; }
    Vertex global_id(int layer, int idx) const { return Vertex(layer * p + idx); }
    // endpoint of the walk from input u alternating labels (a, b, a, ...);
    // -1 when a step is missing
    int out_of(int u, int a, int b) const;
    std::vector<int> alternating_walk(int u, int a, int b) const;  // layer-local indices
    WeightedGraph to_graph() const;                                // unit weights
};

LayeredBaseGraph load_base_graph(const std::string& text);
LayeredBaseGraph load_base_graph_file(const std::string& path);
std::string serialize_base_graph(const LayeredBaseGraph& b);

struct BaseGraphReport {
    bool layering_ok = false;      // structural: parsed shape is layered
    bool determinism_ok = false;   // one forward edge per (vertex, label), distinct targets
    bool pairs_ok = false;         // unique shortest paths + vertex-disjointness
    bool ok = false;
    int pair_count = 0;
    bool label_bound_ok = false;  // |labels| <= sqrt(p)/2 (informational)
    std::vector<std::string> failures;
};

BaseGraphReport validate_base_graph(const LayeredBaseGraph& b);

// Exhaustive search over per-transition label bijections for a valid base
// graph. Feasible for tiny parameters only; nullopt when the space is
// exhausted (or the step budget runs out) without a hit.
std::optional<LayeredBaseGraph> search_base_graph(int p, int l, int labels,
                                                  uint64_t max_steps = 50'000'000);

// --- recursive instances -------------------------------------------------------

struct InstancePair {
    Vertex u = -1, v = -1;
    int label_a = -1, label_b = -1;  // top-level label pair (kappa >= 1)
};

struct RecursiveInstance {
    int kappa = 0;
    int l = 0;
    int top_p = 0;
    WeightedGraph graph;  // integer weights
    std::vector<Vertex> input_ports, output_ports;
    std::vector<InstancePair> pairs;
    std::vector<char> critical;  // per edge id: lies inside a bottom-level complete bipartite copy
    int64_t expected_distance = 0;  // (2 l kappa + 1) (2l - 1)^kappa

    size_t critical_count() const;
};

// bases[0] wraps the whole instance, bases[i] the copies at depth i; bases
// must share l, and bases[i+1].p must equal bases[i].labels. kappa == 0
// builds the complete bipartite base case on p0 ports.
RecursiveInstance build_recursive(const std::vector<LayeredBaseGraph>& bases, int kappa,
                                  int p0 = 0);

struct RecursiveVerifyReport {
    bool distances_ok = false;
    bool uniqueness_ok = false;
    bool disjoint_ok = false;
    bool critical_count_ok = false;   // per-pair critical edges == (2l-1)^kappa
    bool vertex_bound_ok = false;     // n <= 2 (2l)^kappa p^(2 - 2^-kappa)
    bool deletion_ok = true;          // removing one critical edge costs >= 2 (2l-1)^kappa
    bool ok = false;
    int64_t expected_distance = 0;
    size_t pairs_checked = 0;
    double xi_hat = 0.0;  // measured (p^2 / |P|)^(1/2 kappa)
    std::string failure;
};

// check_deletions: delete-and-recompute over every critical edge of every
// pair (quadratic-ish; keep instances small)
RecursiveVerifyReport verify_recursive(const RecursiveInstance& inst, bool check_deletions = true);

}  // namespace spanlab
