#include "spanlab/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spanlab {

namespace {

template <typename W>
struct Item {
    W dist;
    Vertex v;
    bool operator>(const Item& o) const {
        if (dist != o.dist) return dist > o.dist;
        return v > o.v;
    }
};

template <typename W, typename Conv>
ShortestPathTree<W> dijkstra_impl(const WeightedGraph& g, Vertex source, EdgeId skip_edge,
                                  Conv conv, W inf) {
    if (!g.valid_vertex(source)) throw std::invalid_argument("dijkstra: bad source");
    ShortestPathTree<W> t;
    t.source = source;
    t.dist.assign(size_t(g.n()), inf);
    t.parent.assign(size_t(g.n()), -1);
    t.hops.assign(size_t(g.n()), -1);
    std::vector<char> done(size_t(g.n()), 0);
    std::priority_queue<Item<W>, std::vector<Item<W>>, std::greater<>> heap;
    t.dist[size_t(source)] = W(0);
    t.hops[size_t(source)] = 0;
    heap.push({W(0), source});
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (done[size_t(x)] || d != t.dist[size_t(x)]) continue;
        done[size_t(x)] = 1;
        for (const AdjEntry& a : g.neighbors(x)) {
            if (a.edge == skip_edge || done[size_t(a.to)]) continue;
            W nd = d + conv(a.w);
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

}  // namespace

SPTree dijkstra(const WeightedGraph& g, Vertex source, EdgeId skip_edge) {
    return dijkstra_impl<double>(
        g, source, skip_edge, [](double w) { return w; },
        std::numeric_limits<double>::infinity());
}

IntSPTree dijkstra_int(const WeightedGraph& g, Vertex source, EdgeId skip_edge) {
    if (!g.integer_weights())
        throw std::invalid_argument("dijkstra_int requires integer edge weights");
    return dijkstra_impl<int64_t>(
        g, source, skip_edge, [](double w) { return int64_t(std::llround(w)); },
        std::numeric_limits<int64_t>::max());
}

std::optional<PathRecord> try_shortest_path(const WeightedGraph& g, Vertex u, Vertex v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw std::invalid_argument("bad vertex id");
    if (u == v) return PathRecord{};
    SPTree t = dijkstra(g, u);
    if (!t.reached(v)) return std::nullopt;
    return t.path_to(v);
}

PathRecord shortest_path(const WeightedGraph& g, Vertex u, Vertex v) {
    auto p = try_shortest_path(g, u, v);
    if (!p) throw std::runtime_error("shortest_path: unreachable pair");
    return *p;
}

PathRecord MultiSourceTree::path_to_owner(Vertex v) const {
    PathRecord p;
    if (!reached(v)) return p;
    p.vertices.push_back(v);
    Vertex x = v;
    while (parent[size_t(x)] != -1) {
        x = parent[size_t(x)];
        p.vertices.push_back(x);
    }
    p.total_weight = dist[size_t(v)];
    if (p.vertices.size() == 1) p.vertices.clear();
    return p;
}

MultiSourceTree multi_source_dijkstra(const WeightedGraph& g, const std::vector<Vertex>& sources) {
    const double inf = std::numeric_limits<double>::infinity();
    MultiSourceTree t;
    t.dist.assign(size_t(g.n()), inf);
    t.owner.assign(size_t(g.n()), -1);
    t.parent.assign(size_t(g.n()), -1);
    std::vector<char> done(size_t(g.n()), 0);
    std::priority_queue<Item<double>, std::vector<Item<double>>, std::greater<>> heap;
    for (Vertex s : sources) {
        if (!g.valid_vertex(s)) throw std::invalid_argument("multi_source_dijkstra: bad source");
        t.dist[size_t(s)] = 0.0;
        t.owner[size_t(s)] = s;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (done[size_t(x)] || d != t.dist[size_t(x)]) continue;
        done[size_t(x)] = 1;
        for (const AdjEntry& a : g.neighbors(x)) {
            if (done[size_t(a.to)]) continue;
            Vertex y = a.to;
            double nd = d + a.w;
            if (nd < t.dist[size_t(y)]) {
                t.dist[size_t(y)] = nd;
                t.owner[size_t(y)] = t.owner[size_t(x)];
                t.parent[size_t(y)] = x;
                heap.push({nd, y});
            } else if (nd == t.dist[size_t(y)]) {
                // label order: (distance, source id, predecessor id)
                if (t.owner[size_t(x)] < t.owner[size_t(y)] ||
                    (t.owner[size_t(x)] == t.owner[size_t(y)] && x < t.parent[size_t(y)])) {
                    t.owner[size_t(y)] = t.owner[size_t(x)];
                    t.parent[size_t(y)] = x;
                }
            }
        }
    }
    return t;
}

PathCount count_shortest_paths(const WeightedGraph& g, Vertex source, EdgeId skip_edge) {
    IntSPTree t = dijkstra_int(g, source, skip_edge);
    PathCount pc;
    pc.dist.assign(size_t(g.n()), PathCount::kUnreachable);
    pc.count.assign(size_t(g.n()), 0);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v)
        if (t.reached(v)) {
            pc.dist[size_t(v)] = t.dist[size_t(v)];
            order.push_back(v);
        }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (t.dist[size_t(a)] != t.dist[size_t(b)]) return t.dist[size_t(a)] < t.dist[size_t(b)];
        return a < b;
    });
    constexpr uint64_t cap = std::numeric_limits<uint64_t>::max() / 2;
    pc.count[size_t(source)] = 1;
    for (Vertex v : order) {
        if (v == source) continue;
        uint64_t c = 0;
        for (const AdjEntry& a : g.neighbors(v)) {
            if (a.edge == skip_edge) continue;
            Vertex x = a.to;
            if (pc.dist[size_t(x)] == PathCount::kUnreachable) continue;
            if (pc.dist[size_t(x)] + int64_t(std::llround(a.w)) == pc.dist[size_t(v)]) {
                c = (c > cap - pc.count[size_t(x)]) ? cap : c + pc.count[size_t(x)];
            }
        }
        pc.count[size_t(v)] = c;
    }
    return pc;
}

// --- bounded-hop search ------------------------------------------------------

BoundedHopSearch::BoundedHopSearch(const WeightedGraph& g, const std::vector<ExtraEdge>& extra,
                                   Vertex source, int beta) {
    if (!g.valid_vertex(source)) throw std::invalid_argument("bounded hop: bad source");
    if (beta < 1) throw std::invalid_argument("bounded hop: beta must be >= 1");
    n_ = g.n();
    source_ = source;
    const double inf = std::numeric_limits<double>::infinity();

    struct In {
        Vertex from;
        double w;
        uint8_t extra;
    };
    std::vector<std::vector<In>> incoming(static_cast<size_t>(n_));
    for (Vertex v = 0; v < n_; ++v)
        for (const AdjEntry& a : g.neighbors(v)) incoming[size_t(a.to)].push_back({v, a.w, 0});
    for (const ExtraEdge& e : extra) {
        if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v) || e.u == e.v || !(e.w > 0.0))
            throw std::invalid_argument("bounded hop: bad extra edge");
        incoming[size_t(e.v)].push_back({e.u, e.w, 1});
        incoming[size_t(e.u)].push_back({e.v, e.w, 1});
    }

    dist_.assign(size_t(n_), inf);
    final_round_.assign(size_t(n_), -1);
    log_.assign(size_t(n_), {});
    dist_[size_t(source)] = 0.0;
    final_round_[size_t(source)] = 0;
    log_[size_t(source)].push_back({0, 0.0, 0.0, -1, 0});

    int max_rounds = std::min<long long>(beta, n_ > 0 ? n_ - 1 : 0);
    std::vector<double> prev = dist_;
    for (int r = 1; r <= max_rounds; ++r) {
        bool changed = false;
        for (Vertex v = 0; v < n_; ++v) {
            double best = dist_[size_t(v)];
            Vertex arg = -1;
            double arg_pred = 0.0;
            uint8_t arg_extra = 0;
            for (const In& in : incoming[size_t(v)]) {
                double pd = prev[size_t(in.from)];
                if (pd == inf) continue;
                double nd = pd + in.w;
                if (nd < best || (nd == best && arg != -1 && in.from < arg)) {
                    best = nd;
                    arg = in.from;
                    arg_pred = pd;
                    arg_extra = in.extra;
                }
            }
            if (arg != -1 && best < dist_[size_t(v)]) {
                dist_[size_t(v)] = best;
                final_round_[size_t(v)] = r;
                log_[size_t(v)].push_back({r, best, arg_pred, arg, arg_extra});
                changed = true;
            }
        }
        rounds_run_ = r;
        if (!changed) break;
        prev = dist_;
    }
}

bool BoundedHopSearch::reached(Vertex v) const {
    return dist_[size_t(v)] != std::numeric_limits<double>::infinity();
}

double BoundedHopSearch::distance(Vertex v) const { return dist_[size_t(v)]; }

int BoundedHopSearch::hops(Vertex v) const {
    if (!reached(v)) return -1;
    auto w = witness(v);
    return w ? w->path.hop_count() : -1;
}

std::optional<HopPath> BoundedHopSearch::witness(Vertex v) const {
    if (!reached(v)) return std::nullopt;
    HopPath hp;
    std::vector<Vertex> rev;
    std::vector<uint8_t> rev_extra;
    Vertex x = v;
    double want = dist_[size_t(v)];
    int round_cap = final_round_[size_t(v)];
    while (true) {
        const Improvement* hit = nullptr;
        for (const Improvement& im : log_[size_t(x)]) {
            if (im.round <= round_cap && im.dist == want) {
                hit = &im;
                break;  // first achieving round = fewest hops
            }
        }
        if (hit == nullptr) throw std::logic_error("bounded hop: broken reconstruction");
        rev.push_back(x);
        if (hit->parent == -1) break;
        rev_extra.push_back(hit->via_extra);
        want = hit->pred_dist;
        round_cap = hit->round - 1;
        x = hit->parent;
    }
    hp.path.vertices.assign(rev.rbegin(), rev.rend());
    hp.path.total_weight = dist_[size_t(v)];
    hp.edge_from_extra.assign(rev_extra.rbegin(), rev_extra.rend());
    if (hp.path.vertices.size() == 1 && v != source_) hp.path.vertices.clear();
    if (v == source_) {
        hp.path.vertices.clear();
        hp.path.total_weight = 0.0;
        hp.edge_from_extra.clear();
    }
    return hp;
}

std::optional<HopPath> bounded_hop_path(const WeightedGraph& g, const std::vector<ExtraEdge>& extra,
                                        Vertex u, Vertex v, int beta) {
    if (u == v) return HopPath{};
    BoundedHopSearch search(g, extra, u, beta);
    if (!search.reached(v)) return std::nullopt;
    return search.witness(v);
}

const SPTree& ExactOracle::tree(Vertex u) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(u);
    if (it == cache_.end())
        it = cache_.emplace(u, std::make_unique<SPTree>(dijkstra(*g_, u))).first;
    return *it->second;
}

}  // namespace spanlab
