#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/shortest_paths.hpp"

namespace spanlab {

// Nested vertex samples A_0 = V, A_1, ..., truncated at the first empty
// level. levels[i] is sorted by vertex id.
struct SampleHierarchy {
    int requested_levels = 0;
    uint64_t seed = 0;
    std::vector<double> probabilities;         // probability used to draw level i+1 from level i
    std::vector<std::vector<Vertex>> levels;   // nonempty levels only

    int depth() const { return int(levels.size()); }
};

SampleHierarchy sample_hierarchy(int n, int k, double per_level_probability, uint64_t seed);
SampleHierarchy sample_hierarchy(int n, const std::vector<double>& probabilities, uint64_t seed);

struct ClusterEntry {
    Vertex parent = -1;  // next vertex towards the center; -1 at the center
    double dist = 0.0;
    int height = 0;
};

// Pivots, bunches and clusters over a hierarchy.
//
// pivot[i][v] is the nearest level-i vertex (smallest distance, then smallest
// vertex id), except that on exact distance ties between consecutive levels
// the higher-level pivot is inherited downwards; this keeps every vertex
// inside the cluster of each of its pivots, which path reporting relies on.
struct BunchTable {
    std::vector<std::vector<Vertex>> pivot;        // [level][vertex], -1 if no pivot in component
    std::vector<std::vector<double>> pivot_dist;   // infinity when absent
    std::vector<std::vector<Vertex>> pivot_parent; // next vertex towards the pivot; -1 at A_i vertices
    std::vector<int> level_of;                     // max i with v in A_i
    std::vector<std::vector<std::pair<Vertex, double>>> bunch;  // per vertex, sorted by member id
    // cluster[w]: members of C(w) with tree links, sorted by member id
    std::vector<std::vector<std::pair<Vertex, ClusterEntry>>> cluster;

    bool in_bunch(Vertex of, Vertex member) const;
    double bunch_dist(Vertex of, Vertex member) const;
    const ClusterEntry* cluster_entry(Vertex center, Vertex member) const;
    // member -> center walk along the cluster tree
    PathRecord cluster_path(Vertex center, Vertex member) const;
    // v -> p_i(v) walk along the level-i pivot forest
    PathRecord pivot_path(int level, Vertex v) const;

    size_t bunch_entries() const;
    size_t cluster_entries() const;
};

// Builds pivots/bunches/clusters for the given hierarchy. Bunch thresholds
// are strict: v in B_j(u) iff level(v)=j and d(u,v) < d(u, p_{j+1}(u)).
BunchTable build_bunch_table(const WeightedGraph& g, const SampleHierarchy& h);

struct TZOracle {
    SampleHierarchy hierarchy;
    BunchTable table;
    std::vector<EdgeId> spanner_edges;  // union of all cluster-tree edges
    int declared_k = 0;                 // stretch bound is 2*declared_k - 1

    int stretch_bound() const { return 2 * declared_k - 1; }
    // nullopt when u and v are in different components
    std::optional<PathRecord> query(const WeightedGraph& g, Vertex u, Vertex v) const;

    size_t size_words() const;
};

// Classic construction: per-level sampling probability n^{-1/k}.
TZOracle build_tz(const WeightedGraph& g, int k, uint64_t seed);

// --- emulator over a vertex subset ------------------------------------------

// Path-reporting emulator for a point set A: a graph on A whose edge weights
// are exact G-distances, with a TZ oracle answering queries inside it.
struct TZEmulator {
    std::vector<Vertex> points;              // original vertex ids
    WeightedGraph emulator;                  // vertices are indices into points
    TZOracle oracle;                         // built over the complete distance graph on A
    std::vector<Edge> emulator_edges_original;  // endpoints in original ids

    int stretch_bound() const { return oracle.stretch_bound(); }
    // query by original vertex ids; path vertices are original ids
    std::optional<PathRecord> query(Vertex a, Vertex b) const;
};

// dist must be a metric over points (|points| x |points|, symmetric, zero
// diagonal); violations beyond tolerance are rejected.
TZEmulator build_tz_emulator(const std::vector<Vertex>& points,
                             const std::vector<std::vector<double>>& dist, int k, uint64_t seed,
                             double tolerance = 1e-9);

}  // namespace spanlab
