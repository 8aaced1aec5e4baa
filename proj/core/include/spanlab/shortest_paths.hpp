#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Deterministic tie-breaking everywhere: among equal tentative distances the
// predecessor with the smaller vertex id wins, so repeated runs (and any
// parallel schedule) produce the identical tree.

template <typename W>
struct ShortestPathTree {
    Vertex source = -1;
    std::vector<W> dist;
    std::vector<Vertex> parent;  // -1 at the source and at unreachable vertices
    std::vector<int> hops;

    bool reached(Vertex v) const { return v == source || parent[size_t(v)] != -1; }
    W distance(Vertex v) const { return dist[size_t(v)]; }

    // Path source -> v; empty walk when v == source.
    PathRecord path_to(Vertex v) const {
        PathRecord p;
        if (!reached(v)) return p;
        std::vector<Vertex> rev;
        for (Vertex x = v; x != -1; x = parent[size_t(x)]) rev.push_back(x);
        p.vertices.assign(rev.rbegin(), rev.rend());
        p.total_weight = double(dist[size_t(v)]);
        if (p.vertices.size() == 1 && v != source) p.vertices.clear();
        return p;
    }
};

using SPTree = ShortestPathTree<double>;
using IntSPTree = ShortestPathTree<int64_t>;

SPTree dijkstra(const WeightedGraph& g, Vertex source, EdgeId skip_edge = -1);
// Exact arithmetic; requires g.integer_weights().
IntSPTree dijkstra_int(const WeightedGraph& g, Vertex source, EdgeId skip_edge = -1);

PathRecord shortest_path(const WeightedGraph& g, Vertex u, Vertex v);
// nullopt when v is unreachable from u.
std::optional<PathRecord> try_shortest_path(const WeightedGraph& g, Vertex u, Vertex v);

// Multi-source search. Labels are compared as (distance, source id,
// predecessor id), so owner(v) is the smallest-id nearest source.
struct MultiSourceTree {
    std::vector<double> dist;
    std::vector<Vertex> owner;   // claiming source; -1 if unreachable
    std::vector<Vertex> parent;  // next vertex towards owner; -1 at sources

    bool reached(Vertex v) const { return owner[size_t(v)] != -1; }
    PathRecord path_to_owner(Vertex v) const;  // v -> owner(v)
};

MultiSourceTree multi_source_dijkstra(const WeightedGraph& g, const std::vector<Vertex>& sources);

// Dijkstra from `source` that only settles vertices accepted by `admit`.
// admit(v, dist) is called once per would-be settlement.
template <typename Admit>
SPTree dijkstra_restricted(const WeightedGraph& g, Vertex source, Admit admit);

// Number of distinct shortest paths source -> v (saturating), plus integer
// distances. Requires integer weights; used by uniqueness checks.
struct PathCount {
    std::vector<int64_t> dist;
    std::vector<uint64_t> count;  // saturating at UINT64_MAX/2
    static constexpr int64_t kUnreachable = std::numeric_limits<int64_t>::max();
};
PathCount count_shortest_paths(const WeightedGraph& g, Vertex source, EdgeId skip_edge = -1);

// --- bounded-hop searches ---------------------------------------------------

struct ExtraEdge {
    Vertex u = -1;
    Vertex v = -1;
    double w = 0.0;
};

struct HopPath {
    PathRecord path;
    std::vector<uint8_t> edge_from_extra;  // one flag per edge of `path`
};

// Relaxation rounds from `source` over g plus `extra`; after round r the
// label of v is the minimum weight of a <= r hop walk. A minimum-weight walk
// under positive weights is a simple path, so rounds are capped at n-1 and
// the search stops early once a round changes nothing.
class BoundedHopSearch {
public:
    BoundedHopSearch(const WeightedGraph& g, const std::vector<ExtraEdge>& extra, Vertex source,
                     int beta);

    bool reached(Vertex v) const;
    double distance(Vertex v) const;
    int hops(Vertex v) const;                      // hop count of the witness path
    std::optional<HopPath> witness(Vertex v) const;
    int rounds_run() const { return rounds_run_; }

private:
    struct Improvement {
        int round;
        double dist;
        double pred_dist;
        Vertex parent;
        uint8_t via_extra;
    };
    int n_;
    Vertex source_;
    std::vector<double> dist_;
    std::vector<int> final_round_;  // round at which dist_ was first achieved
    std::vector<std::vector<Improvement>> log_;
    int rounds_run_ = 0;
};

// minimum-weight u-v path among those with at most beta edges in g + extra
std::optional<HopPath> bounded_hop_path(const WeightedGraph& g, const std::vector<ExtraEdge>& extra,
                                        Vertex u, Vertex v, int beta);

// --- ground-truth oracle ----------------------------------------------------

// Caches one deterministic shortest-path tree per queried source. Thread-safe.
class ExactOracle {
public:
    explicit ExactOracle(const WeightedGraph& g) : g_(&g) {}

    double distance(Vertex u, Vertex v) const { return tree(u).distance(v); }
    bool reachable(Vertex u, Vertex v) const { return tree(u).reached(v); }
    PathRecord path(Vertex u, Vertex v) const { return tree(u).path_to(v); }
    const SPTree& tree(Vertex u) const;
    const WeightedGraph& graph() const { return *g_; }

private:
    const WeightedGraph* g_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Vertex, std::unique_ptr<SPTree>> cache_;
};

// --- implementation of the restricted search --------------------------------

namespace detail {
struct HeapItem {
    double dist;
    Vertex v;
    bool operator>(const HeapItem& o) const {
        if (dist != o.dist) return dist > o.dist;
        return v > o.v;
    }
};
}  // namespace detail

template <typename Admit>
SPTree dijkstra_restricted(const WeightedGraph& g, Vertex source, Admit admit) {
    const double inf = std::numeric_limits<double>::infinity();
    SPTree t;
    t.source = source;
    t.dist.assign(size_t(g.n()), inf);
    t.parent.assign(size_t(g.n()), -1);
    t.hops.assign(size_t(g.n()), -1);
    std::vector<char> done(size_t(g.n()), 0);
    std::vector<char> rejected(size_t(g.n()), 0);
    std::priority_queue<detail::HeapItem, std::vector<detail::HeapItem>, std::greater<>> heap;
    t.dist[size_t(source)] = 0.0;
    t.hops[size_t(source)] = 0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (done[size_t(x)] || rejected[size_t(x)] || d != t.dist[size_t(x)]) continue;
        if (!admit(x, d)) {
            rejected[size_t(x)] = 1;
            t.dist[size_t(x)] = inf;
            t.parent[size_t(x)] = -1;
            t.hops[size_t(x)] = -1;
            continue;
        }
        done[size_t(x)] = 1;
        for (const AdjEntry& a : g.neighbors(x)) {
            if (done[size_t(a.to)] || rejected[size_t(a.to)]) continue;
            double nd = d + a.w;
            if (nd < t.dist[size_t(a.to)]) {
                t.dist[size_t(a.to)] = nd;
                t.parent[size_t(a.to)] = x;
                t.hops[size_t(a.to)] = t.hops[size_t(x)] + 1;
                heap.push({nd, a.to});
            } else if (nd == t.dist[size_t(a.to)] && x < t.parent[size_t(a.to)]) {
                t.parent[size_t(a.to)] = x;
                t.hops[size_t(a.to)] = t.hops[size_t(x)] + 1;
            }
        }
    }
    return t;
}

}  // namespace spanlab
