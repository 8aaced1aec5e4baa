#include "brute_force.hpp"

#include <algorithm>
#include <limits>

namespace spanlab::testing {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> bellman_ford(const WeightedGraph& g, Vertex source) {
    std::vector<double> dist(static_cast<size_t>(g.n()), kInf);
    dist[size_t(source)] = 0.0;
    for (int round = 0; round + 1 < g.n(); ++round) {
        bool changed = false;
        for (const Edge& e : g.edges()) {
            if (dist[size_t(e.u)] + e.w < dist[size_t(e.v)]) {
                dist[size_t(e.v)] = dist[size_t(e.u)] + e.w;
                changed = true;
            }
            if (dist[size_t(e.v)] + e.w < dist[size_t(e.u)]) {
                dist[size_t(e.u)] = dist[size_t(e.v)] + e.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (double& d : dist)
        if (d == kInf) d = kUnreached;
    return dist;
}

std::vector<std::vector<double>> bellman_ford_all_pairs(const WeightedGraph& g) {
    std::vector<std::vector<double>> out;
    for (Vertex u = 0; u < g.n(); ++u) out.push_back(bellman_ford(g, u));
    return out;
}

std::optional<PathRecord> canonical_path_brute(const WeightedGraph& g, Vertex u, Vertex v) {
    if (u == v) return PathRecord{};
    std::vector<double> dist = bellman_ford(g, u);
    if (dist[size_t(v)] == kUnreached) return std::nullopt;
    PathRecord p;
    std::vector<Vertex> rev{v};
    Vertex x = v;
    while (x != u) {
        Vertex best = -1;
        for (const AdjEntry& a : g.neighbors(x)) {
            if (dist[size_t(a.to)] == kUnreached) continue;
            if (dist[size_t(a.to)] + a.w == dist[size_t(x)]) {
                if (best == -1 || a.to < best) best = a.to;
            }
        }
        if (best == -1) return std::nullopt;  // inconsistent distances
        rev.push_back(best);
        x = best;
    }
    p.vertices.assign(rev.rbegin(), rev.rend());
    p.total_weight = dist[size_t(v)];
    return p;
}

double bounded_hop_weight_brute(
    const WeightedGraph& g,
    const std::vector<std::pair<std::pair<Vertex, Vertex>, double>>& extra, Vertex u, Vertex v,
    int beta) {
    std::vector<double> cur(static_cast<size_t>(g.n()), kInf);
    cur[size_t(u)] = 0.0;
    for (int h = 0; h < beta; ++h) {
        std::vector<double> next = cur;
        auto relax = [&](Vertex a, Vertex b, double w) {
            if (cur[size_t(a)] + w < next[size_t(b)]) next[size_t(b)] = cur[size_t(a)] + w;
            if (cur[size_t(b)] + w < next[size_t(a)]) next[size_t(a)] = cur[size_t(b)] + w;
        };
        for (const Edge& e : g.edges()) relax(e.u, e.v, e.w);
        for (const auto& [pair, w] : extra) relax(pair.first, pair.second, w);
        cur = next;
    }
    return cur[size_t(v)] == kInf ? kUnreached : cur[size_t(v)];
}

namespace {
void dfs_paths(const WeightedGraph& g, Vertex cur, Vertex target, std::vector<char>& used,
               double weight, std::vector<double>& out) {
    if (cur == target) {
        out.push_back(weight);
        return;
    }
    for (const AdjEntry& a : g.neighbors(cur)) {
        if (used[size_t(a.to)]) continue;
        used[size_t(a.to)] = 1;
        dfs_paths(g, a.to, target, used, weight + a.w, out);
        used[size_t(a.to)] = 0;
    }
}
}  // namespace

std::vector<double> all_simple_path_weights(const WeightedGraph& g, Vertex u, Vertex v) {
    std::vector<double> out;
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    used[size_t(u)] = 1;
    dfs_paths(g, u, v, used, 0.0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spanlab::testing
