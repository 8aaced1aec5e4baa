#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/tz_oracle.hpp"

namespace spanlab {

// Rooted forest over the host graph's vertices: parent/height/root links.
// tree_route recovers the unique tree path by descending the higher endpoint.
struct RootedForest {
    std::vector<Vertex> parent;  // -1 at roots
    std::vector<int> height;
    std::vector<Vertex> root_of;

    bool same_tree(Vertex a, Vertex b) const { return root_of[size_t(a)] == root_of[size_t(b)]; }
};

// Unique a-b path inside one tree; throws when a and b sit in different trees.
PathRecord tree_route(const WeightedGraph& g, const RootedForest& f, Vertex a, Vertex b);

// BFS-peeling partition: every cluster spans a tree of radius <= k and the
// cluster count is at most n/k (clusters are peeled with >= k vertices each,
// except possibly the final one).
struct Clustering {
    int radius = 0;
    std::vector<int> cluster_of;
    RootedForest forest;
    std::vector<Vertex> roots;  // per cluster id

    int count() const { return int(roots.size()); }
};

Clustering unweighted_clustering(const WeightedGraph& g, int k);

// Contraction of g by a vertex partition. Each contracted edge remembers the
// minimum-weight crossing edge (lexicographic tie-break) as its witness.
struct ContractedGraph {
    WeightedGraph graph;           // vertex i = part i
    std::vector<EdgeId> witness;   // per contracted edge, an edge id of the host graph
};

ContractedGraph contract_by_parts(const WeightedGraph& g, const std::vector<int>& part_of,
                                  int part_count);

// One partial-Boruvka round over an explicit weighted graph: pick e_v per
// vertex, keep the larger parity class of min{h(a),h(b)}, return the stars.
struct StarPartition {
    std::vector<int> star_of;          // per vertex of h
    std::vector<Vertex> star_root;     // per star id
    std::vector<std::pair<Vertex, Vertex>> forest_edges;  // the Boruvka forest E'
    std::vector<std::pair<Vertex, Vertex>> kept_edges;    // E'' (member, ...) as vertex pairs
    size_t parity_even_size = 0, parity_odd_size = 0;
    std::vector<Vertex> lightest_edge_of;  // e_v as the neighbor choice per vertex (-1 if isolated)

    int count() const { return int(star_root.size()); }
};

StarPartition boruvka_star_round(const WeightedGraph& h);

// Forest hierarchy F_0 (edgeless) .. F_l, merging partial-Boruvka stars of
// the per-level contracted graphs. Tree counts shrink by 3/4 per level.
struct ForestHierarchy {
    int levels = 0;  // l
    std::vector<RootedForest> forest;     // F_0 .. F_l
    std::vector<std::vector<int>> tree_of;  // per level, tree id per vertex
    std::vector<int> tree_counts;           // per level
};

ForestHierarchy build_forest_hierarchy(const WeightedGraph& g, int levels);

// --- oracles -----------------------------------------------------------------

struct ClusterQueryStats {
    int cluster_path_len = 0;      // t, the number of trees on the expanded path
    double cluster_path_weight = 0.0;  // w(Q) in the contracted graph
};

// Unweighted PRDO: BFS clustering with radius k, TZ(k) on the cluster graph,
// per-query expansion through cluster trees and witness edges.
// Guarantees |P| <= t(2k+1) per query and end-to-end stretch 2k(2k+1).
struct UnweightedPrdo {
    int k = 0;
    Clustering clustering;
    ContractedGraph cg;
    TZOracle tz;

    double declared_stretch() const { return double(2 * k) * double(2 * k + 1); }
    std::optional<PathRecord> query(const WeightedGraph& g, Vertex u, Vertex v,
                                    ClusterQueryStats* stats = nullptr) const;
    size_t size_words() const;
};

UnweightedPrdo build_unweighted_prdo(const WeightedGraph& g, int k, uint64_t seed);

// Weighted PRDO: forest hierarchy to level l = floor(log_{4/3} k) - 2, TZ(k)
// on the top contracted graph, extraction through the level-l trees with
// w(P) <= 3^{l+1} (d_G(u,v) + w(Q)).
struct WeightedPrdo {
    int k = 0;
    int l = 0;
    ForestHierarchy hierarchy;
    ContractedGraph top;  // H_l
    TZOracle tz;

    double declared_stretch() const;  // k^{log_{4/3} 4}
    double extraction_factor() const;  // 3^{l+1}
    std::optional<PathRecord> query(const WeightedGraph& g, Vertex u, Vertex v,
                                    ClusterQueryStats* stats = nullptr) const;
    size_t size_words() const;
};

WeightedPrdo build_weighted_prdo(const WeightedGraph& g, int k, uint64_t seed);

}  // namespace spanlab
