#include "spanlab/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace spanlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

long long LambdaSchedule::beta_budget() const {
    // exact integer evaluation of (c+1)^F * (2c+2)^(2 floor(F/c)) / c^F
    __int128 num = 1, den = 1;
    for (int i = 0; i < F; ++i) {
        num *= c + 1;
        den *= c;
    }
    int q = F / c;
    for (int i = 0; i < 2 * q; ++i) num *= 2 * c + 2;
    __int128 budget = (num + den - 1) / den;
    const __int128 cap = __int128(1) << 62;
    if (budget > cap) budget = cap;
    return (long long)(budget);
}

LambdaSchedule lambda_schedule(int c, int k) {
    if (c <= 1) throw std::invalid_argument("lambda_schedule: c must be > 1");
    if (c > k) throw std::invalid_argument("lambda_schedule: c must be <= k");
    LambdaSchedule s;
    s.c = c;
    s.k = k;
    int t = 0;
    int64_t power = 1;
    while (power < k + 1) {
        power *= c + 1;
        ++t;
    }
    s.F = c * t;
    s.lambda.resize(size_t(s.F));
    std::vector<int64_t> running(size_t(s.F) + 1, 0);  // running[i] = sum of lambda_l, l < i
    for (int i = 0; i < s.F; ++i) {
        int b = s.f_inv(i);
        s.lambda[size_t(i)] = 1 + running[size_t(b)];
        running[size_t(i) + 1] = running[size_t(i)] + s.lambda[size_t(i)];
    }
    // cross-check against the closed form (c+1)^a at index ac+b
    for (int i = 0; i < s.F; ++i) {
        int a = i / c;
        int64_t expect = 1;
        for (int j = 0; j < a; ++j) expect *= c + 1;
        if (s.lambda[size_t(i)] != expect)
            throw std::logic_error("lambda recurrence disagrees with closed form");
    }
    return s;
}

double default_hopset_delta(int c, int k) { return std::pow(double(k), -9.0 / double(c - 1)); }

std::vector<ExtraEdge> HopsetParts::as_extra_edges() const {
    std::vector<ExtraEdge> out;
    out.reserve(edges.size());
    for (const HopsetEdge& e : edges) out.push_back({e.u, e.v, e.w});
    return out;
}

namespace {
uint64_t pair_key(Vertex u, Vertex v) {
    auto [a, b] = std::minmax(u, v);
    return (uint64_t(uint32_t(a)) << 32) | uint64_t(uint32_t(b));
}
}  // namespace

void HopsetParts::rebuild_index() {
    edge_index_.clear();
    edge_index_.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        edge_index_.emplace(pair_key(edges[i].u, edges[i].v), uint32_t(i));
}

const HopsetEdge* HopsetParts::find(Vertex u, Vertex v) const {
    auto it = edge_index_.find(pair_key(u, v));
    if (it != edge_index_.end()) return &edges[it->second];
    if (edge_index_.empty()) {
        for (const HopsetEdge& e : edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return &e;
    }
    return nullptr;
}

size_t HopsetParts::h1_preserver_links() const {
    size_t links = 0;
    for (const auto& lv : table.pivot_parent)
        for (Vertex p : lv)
            if (p != -1) ++links;
    return links;
}

size_t HopsetParts::h2_preserver_links() const {
    size_t links = 0;
    for (Vertex v = 0; v < Vertex(table.level_of.size()); ++v) {
        if (table.level_of[size_t(v)] >= c) continue;
        const auto& members = table.cluster[size_t(v)];
        for (const auto& [x, e] : members)
            if (e.parent != -1) ++links;
    }
    return links;
}

namespace {

std::vector<EdgeId> edges_from_links(const WeightedGraph& g,
                                     const std::vector<std::pair<Vertex, Vertex>>& links) {
    std::vector<char> mark(size_t(g.m()), 0);
    for (auto [a, b] : links) {
        auto id = g.find_edge(a, b);
        if (!id) throw std::logic_error("preserver link is not a graph edge");
        mark[size_t(*id)] = 1;
    }
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (mark[size_t(e)]) out.push_back(e);
    return out;
}

}  // namespace

std::vector<EdgeId> HopsetParts::h1_preserver_edges(const WeightedGraph& g) const {
    std::vector<std::pair<Vertex, Vertex>> links;
    for (const auto& lv : table.pivot_parent)
        for (Vertex v = 0; v < Vertex(lv.size()); ++v)
            if (lv[size_t(v)] != -1) links.emplace_back(v, lv[size_t(v)]);
    return edges_from_links(g, links);
}

std::vector<EdgeId> HopsetParts::h2_preserver_edges(const WeightedGraph& g) const {
    std::vector<std::pair<Vertex, Vertex>> links;
    for (Vertex v = 0; v < Vertex(table.level_of.size()); ++v) {
        if (table.level_of[size_t(v)] >= c) continue;
        for (const auto& [x, e] : table.cluster[size_t(v)])
            if (e.parent != -1) links.emplace_back(x, e.parent);
    }
    return edges_from_links(g, links);
}

HopsetParts build_hopset(const WeightedGraph& g, int c, int k, double delta, uint64_t seed) {
    if (!(delta > 0.0) || delta > 0.5)
        throw std::invalid_argument("build_hopset: delta must be in (0, 1/2]");
    HopsetParts parts;
    parts.c = c;
    parts.k = k;
    parts.delta = delta;
    parts.schedule = lambda_schedule(c, k);

    const int n = g.n();
    std::vector<double> probs;
    for (int i = 0; i < parts.schedule.F; ++i) {
        double p = delta * std::pow(double(std::max(2, n)),
                                    -double(parts.schedule.lambda[size_t(i)]) / double(k));
        probs.push_back(std::min(p, 0.5));
    }
    parts.hierarchy = sample_hierarchy(n, probs, seed);
    parts.table = build_bunch_table(g, parts.hierarchy);

    const int depth = parts.hierarchy.depth();
    std::map<std::pair<Vertex, Vertex>, size_t> present;
    auto try_add = [&](Vertex u, Vertex v, double w, HopsetPart part, int level) {
        auto key = std::minmax(u, v);
        if (present.count({key.first, key.second})) return;
        present[{key.first, key.second}] = parts.edges.size();
        parts.edges.push_back({u, v, w, part, level});
        if (part == HopsetPart::H1) ++parts.h1_count;
        if (part == HopsetPart::H2) ++parts.h2_count;
        if (part == HopsetPart::H3) ++parts.h3_count;
    };

    // H1: every vertex to each of its pivots (level-0 pivots are the vertices
    // themselves, so edges appear from level 1 up)
    for (int i = 1; i < depth; ++i)
        for (Vertex u = 0; u < n; ++u) {
            Vertex w = parts.table.pivot[size_t(i)][size_t(u)];
            if (w == -1 || w == u) continue;
            try_add(u, w, parts.table.pivot_dist[size_t(i)][size_t(u)], HopsetPart::H1, i);
        }
    // H2 then H3: bunch edges (u, v) with v in B_j(u) and u in A_{f_inv(j)},
    // enumerated through the clusters of the level-j centers
    for (int pass = 0; pass < 2; ++pass) {
        for (Vertex v = 0; v < n; ++v) {
            int j = parts.table.level_of[size_t(v)];
            bool low = j < c;
            if ((pass == 0) != low) continue;
            int need = parts.schedule.f_inv(j);
            for (const auto& [u, entry] : parts.table.cluster[size_t(v)]) {
                if (u == v) continue;
                if (parts.table.level_of[size_t(u)] < need) continue;
                try_add(u, v, entry.dist, low ? HopsetPart::H2 : HopsetPart::H3, j);
            }
        }
    }
    parts.rebuild_index();
    return parts;
}

PathRecord hopset_pivot_path(const HopsetParts& parts, int level, Vertex u) {
    return parts.table.pivot_path(level, u);
}

PathRecord hopset_cluster_path(const HopsetParts& parts, Vertex center, Vertex member) {
    if (parts.table.level_of[size_t(center)] >= parts.c)
        throw std::runtime_error("not preserved: center above the H2 level range");
    return parts.table.cluster_path(center, member);
}

PathRecord preserver_path(const HopsetParts& parts, Vertex u, Vertex v) {
    const HopsetEdge* e = parts.find(u, v);
    if (e == nullptr || e->part == HopsetPart::H3)
        throw std::runtime_error("not preserved: pair is not an H1 or H2 hopset edge");
    PathRecord p;
    if (e->part == HopsetPart::H1) {
        p = hopset_pivot_path(parts, e->level, e->u);
    } else {
        p = hopset_cluster_path(parts, e->v, e->u);
    }
    if (!p.vertices.empty() && p.vertices.front() != u) p = p.reversed();
    return p;
}

HopsetVerifyReport verify_hopset(const WeightedGraph& g, const HopsetParts& parts,
                                 const PairSet& pairs) {
    HopsetVerifyReport rep;
    rep.stretch_bound = parts.stretch_bound();
    rep.beta_budget = parts.beta_budget();
    ExactOracle exact(g);
    std::vector<ExtraEdge> extra = parts.as_extra_edges();

    // group by source so each source runs one bounded-hop sweep
    std::map<Vertex, std::vector<Vertex>> by_source;
    for (auto [u, v] : pairs.pairs) by_source[u].push_back(v);

    int beta = int(std::min<long long>(rep.beta_budget, std::max(1, g.n() - 1)));
    for (auto& [u, targets] : by_source) {
        BoundedHopSearch search(g, extra, u, beta);
        for (Vertex v : targets) {
            ++rep.pairs_checked;
            double d = exact.reachable(u, v) ? exact.distance(u, v) : kInf;
            if (d == kInf) {
                if (search.reached(v)) throw std::logic_error("hopset connects across components");
                continue;
            }
            if (!search.reached(v)) {
                rep.ok = false;
                if (rep.witness_u == -1) rep.witness_u = u, rep.witness_v = v;
                continue;
            }
            double got = search.distance(v);
            double stretch = (d == 0.0) ? 1.0 : got / d;
            int hops = search.hops(v);
            if (stretch > rep.worst_stretch) rep.worst_stretch = stretch;
            if (hops > rep.worst_hops) rep.worst_hops = hops;
            bool violated = got > double(rep.stretch_bound) * d * (1.0 + 1e-9) ||
                            hops > rep.beta_budget;
            if (violated) {
                rep.ok = false;
                if (rep.witness_u == -1) rep.witness_u = u, rep.witness_v = v;
            }
        }
    }
    return rep;
}

}  // namespace spanlab
