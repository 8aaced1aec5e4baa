#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spanlab {

using Vertex = int32_t;
using EdgeId = int32_t;

struct Edge {
    Vertex u = -1;
    Vertex v = -1;
    double w = 0.0;
};

struct AdjEntry {
    Vertex to = -1;
    double w = 0.0;
    EdgeId edge = -1;
};

// Undirected graph with strictly positive edge weights. No self-loops; at
// most one edge per unordered pair (parallel edges collapse to the lightest
// at load time). Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, const std::vector<Edge>& edges);

    int n() const { return int(adj_.size()); }
    int m() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[size_t(e)]; }
    const std::vector<AdjEntry>& neighbors(Vertex u) const { return adj_[size_t(u)]; }

    // true when every weight is an exact integer; lower-bound labs require it
    bool integer_weights() const { return integer_weights_; }
    bool unit_weights() const { return unit_weights_; }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    bool valid_vertex(Vertex u) const { return u >= 0 && u < n(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<AdjEntry>> adj_;
    bool integer_weights_ = true;
    bool unit_weights_ = true;
};

// A walk through a graph. Repeated vertices are allowed: composed oracles
// return tours. hop_count() == vertices.size()-1 for nonempty walks.
struct PathRecord {
    std::vector<Vertex> vertices;
    double total_weight = 0.0;

    int hop_count() const { return vertices.empty() ? 0 : int(vertices.size()) - 1; }
    bool empty() const { return vertices.size() <= 1; }

    void append(const PathRecord& tail);            // tail must start where *this ends
    void append_edge(Vertex to, double w);
    PathRecord reversed() const;
};

// Checks that consecutive vertices are joined by an edge of g and that
// total_weight matches the sum of edge weights; returns an error message.
std::optional<std::string> check_walk(const WeightedGraph& g, const PathRecord& p,
                                      Vertex from, Vertex to, double tol = 1e-9);

struct PairSet {
    std::vector<std::pair<Vertex, Vertex>> pairs;  // deduplicated as unordered pairs

    size_t size() const { return pairs.size(); }
    static PairSet from_pairs(std::vector<std::pair<Vertex, Vertex>> raw);
};

// --- edge-list / pair-list file formats -----------------------------------
//
// Edge list: header line "n <count>", then "u v w" lines; '#' comments;
// UTF-8, LF-terminated. Pair list: "u v" lines.

WeightedGraph load_graph(const std::string& text);
WeightedGraph load_graph_file(const std::string& path);
std::string serialize_graph(const WeightedGraph& g);

PairSet load_pairs(const std::string& text, const WeightedGraph& g);
PairSet load_pairs_file(const std::string& path, const WeightedGraph& g);
std::string serialize_pairs(const PairSet& ps);

std::vector<Vertex> load_ranking(const std::string& text, const WeightedGraph& g);
std::vector<Vertex> load_ranking_file(const std::string& path, const WeightedGraph& g);

// Girth of g viewed as an unweighted graph; nullopt for forests.
std::optional<int> girth(const WeightedGraph& g);

// Connected component ids (BFS order, deterministic).
std::vector<int> components(const WeightedGraph& g);
bool same_component(const WeightedGraph& g, Vertex u, Vertex v);

}  // namespace spanlab
