#include "spanlab/cluster_prdo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

namespace spanlab {

PathRecord tree_route(const WeightedGraph& g, const RootedForest& f, Vertex a, Vertex b) {
    if (!f.same_tree(a, b)) throw std::runtime_error("tree route: endpoints in different trees");
    PathRecord p;
    if (a == b) return p;
    std::vector<Vertex> left{a}, right{b};  // a -> lca, b -> lca
    Vertex x = a, y = b;
    while (x != y) {
        if (f.height[size_t(x)] > f.height[size_t(y)]) {
            x = f.parent[size_t(x)];
            left.push_back(x);
        } else {
            y = f.parent[size_t(y)];
            right.push_back(y);
        }
        if (x == -1 || y == -1) throw std::logic_error("tree route: broken parent chain");
    }
    p.vertices = left;
    p.vertices.insert(p.vertices.end(), right.rbegin() + 1, right.rend());
    double w = 0.0;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
        if (!e) throw std::logic_error("tree route: forest link is not a graph edge");
        w += g.edge(*e).w;
    }
    p.total_weight = w;
    return p;
}

Clustering unweighted_clustering(const WeightedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("clustering: k must be >= 1");
    if (!g.unit_weights()) throw std::invalid_argument("clustering: graph must be unweighted");
    const int n = g.n();
    Clustering c;
    c.radius = k;
    c.cluster_of.assign(size_t(n), -1);
    c.forest.parent.assign(size_t(n), -1);
    c.forest.height.assign(size_t(n), 0);
    c.forest.root_of.assign(size_t(n), -1);

    std::vector<char> removed(size_t(n), 0);
    std::vector<int> depth(static_cast<size_t>(n));
    std::vector<Vertex> parent(static_cast<size_t>(n));
    for (Vertex start = 0; start < n; ++start) {
        if (removed[size_t(start)]) continue;
        // peel the component of `start` (smallest remaining id is the BFS root)
        while (true) {
            std::fill(depth.begin(), depth.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::queue<Vertex> q;
            depth[size_t(start)] = 0;
            q.push(start);
            Vertex deepest = start;
            std::vector<Vertex> order;
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                order.push_back(x);
                if (depth[size_t(x)] > depth[size_t(deepest)] ||
                    (depth[size_t(x)] == depth[size_t(deepest)] && x < deepest))
                    deepest = x;
                for (const AdjEntry& a : g.neighbors(x)) {
                    if (removed[size_t(a.to)] || depth[size_t(a.to)] != -1) continue;
                    depth[size_t(a.to)] = depth[size_t(x)] + 1;
                    parent[size_t(a.to)] = x;
                    q.push(a.to);
                }
            }
            if (depth[size_t(deepest)] <= k) {
                // remainder fits in one cluster rooted at `start`
                int id = int(c.roots.size());
                c.roots.push_back(start);
                for (Vertex x : order) {
                    c.cluster_of[size_t(x)] = id;
                    c.forest.parent[size_t(x)] = parent[size_t(x)];
                    c.forest.height[size_t(x)] = depth[size_t(x)];
                    c.forest.root_of[size_t(x)] = start;
                    removed[size_t(x)] = 1;
                }
                break;
            }
            // walk k steps up from the deepest leaf; peel that subtree
            Vertex sub_root = deepest;
            for (int step = 0; step < k; ++step) sub_root = parent[size_t(sub_root)];
            int id = int(c.roots.size());
            c.roots.push_back(sub_root);
            // collect the subtree of sub_root in the BFS tree
            std::vector<char> in_sub(size_t(n), 0);
            in_sub[size_t(sub_root)] = 1;
            for (Vertex x : order) {
                if (x == sub_root) continue;
                Vertex px = parent[size_t(x)];
                if (px != -1 && in_sub[size_t(px)]) in_sub[size_t(x)] = 1;
            }
            for (Vertex x : order) {
                if (!in_sub[size_t(x)]) continue;
                c.cluster_of[size_t(x)] = id;
                c.forest.parent[size_t(x)] = (x == sub_root) ? -1 : parent[size_t(x)];
                c.forest.height[size_t(x)] = depth[size_t(x)] - depth[size_t(sub_root)];
                c.forest.root_of[size_t(x)] = sub_root;
                removed[size_t(x)] = 1;
            }
        }
    }
    return c;
}

ContractedGraph contract_by_parts(const WeightedGraph& g, const std::vector<int>& part_of,
                                  int part_count) {
    ContractedGraph out;
    std::map<std::pair<int, int>, EdgeId> best;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        int pu = part_of[size_t(ed.u)], pv = part_of[size_t(ed.v)];
        if (pu == pv) continue;
        auto key = std::minmax(pu, pv);
        auto it = best.find({key.first, key.second});
        if (it == best.end()) {
            best[{key.first, key.second}] = e;
        } else {
            const Edge& cur = g.edge(it->second);
            auto cur_key = std::minmax(cur.u, cur.v);
            auto new_key = std::minmax(ed.u, ed.v);
            if (ed.w < cur.w ||
                (ed.w == cur.w && std::pair(new_key.first, new_key.second) <
                                      std::pair(cur_key.first, cur_key.second)))
                it->second = e;
        }
    }
    std::vector<Edge> edges;
    for (const auto& [key, e] : best) {
        edges.push_back({Vertex(key.first), Vertex(key.second), g.edge(e).w});
        out.witness.push_back(e);
    }
    out.graph = WeightedGraph(part_count, edges);
    return out;
}

StarPartition boruvka_star_round(const WeightedGraph& h) {
    const int n = h.n();
    StarPartition sp;
    sp.lightest_edge_of.assign(size_t(n), -1);

    // e_v: minimum weight, then lexicographically smallest (min id, max id)
    std::vector<EdgeId> ev(size_t(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        for (const AdjEntry& a : h.neighbors(v)) {
            if (ev[size_t(v)] == -1) {
                ev[size_t(v)] = a.edge;
                continue;
            }
            const Edge& cur = h.edge(ev[size_t(v)]);
            const Edge& cand = h.edge(a.edge);
            auto ck = std::minmax(cur.u, cur.v);
            auto nk = std::minmax(cand.u, cand.v);
            if (cand.w < cur.w ||
                (cand.w == cur.w &&
                 std::pair(nk.first, nk.second) < std::pair(ck.first, ck.second)))
                ev[size_t(v)] = a.edge;
        }
        if (ev[size_t(v)] != -1) {
            const Edge& e = h.edge(ev[size_t(v)]);
            sp.lightest_edge_of[size_t(v)] = (e.u == v) ? e.v : e.u;
        }
    }

    // Boruvka forest E' = { e_v } (deduplicated)
    std::vector<char> in_forest(size_t(h.m()), 0);
    for (Vertex v = 0; v < n; ++v)
        if (ev[size_t(v)] != -1) in_forest[size_t(ev[size_t(v)])] = 1;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> fadj(static_cast<size_t>(n));
    for (EdgeId e = 0; e < h.m(); ++e)
        if (in_forest[size_t(e)]) {
            const Edge& ed = h.edge(e);
            fadj[size_t(ed.u)].push_back({ed.v, e});
            fadj[size_t(ed.v)].push_back({ed.u, e});
            sp.forest_edges.emplace_back(ed.u, ed.v);
        }

    // components of E'; root = smaller endpoint of the lexicographically
    // smallest minimum-weight edge of the tree
    std::vector<int> comp(size_t(n), -1);
    std::vector<int> height(size_t(n), 0);
    std::vector<Vertex> bparent(size_t(n), -1);
    int comp_count = 0;
    std::vector<std::vector<Vertex>> comp_members;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[size_t(s)] != -1) continue;
        std::vector<Vertex> members;
        std::queue<Vertex> q;
        comp[size_t(s)] = comp_count;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            members.push_back(x);
            for (auto [y, e] : fadj[size_t(x)])
                if (comp[size_t(y)] == -1) {
                    comp[size_t(y)] = comp_count;
                    q.push(y);
                }
        }
        comp_members.push_back(std::move(members));
        ++comp_count;
    }
    std::vector<char> on_tree(size_t(n), 0);
    for (int ci = 0; ci < comp_count; ++ci) {
        const auto& members = comp_members[size_t(ci)];
        EdgeId min_edge = -1;
        for (Vertex x : members) {
            for (auto [y, e] : fadj[size_t(x)]) {
                if (min_edge == -1) {
                    min_edge = e;
                    continue;
                }
                const Edge& cur = h.edge(min_edge);
                const Edge& cand = h.edge(e);
                auto ck = std::minmax(cur.u, cur.v);
                auto nk = std::minmax(cand.u, cand.v);
                if (cand.w < cur.w ||
                    (cand.w == cur.w &&
                     std::pair(nk.first, nk.second) < std::pair(ck.first, ck.second)))
                    min_edge = e;
            }
        }
        Vertex root = (min_edge == -1) ? members.front()
                                       : std::min(h.edge(min_edge).u, h.edge(min_edge).v);
        // heights by BFS from the root inside the Boruvka tree
        std::queue<Vertex> q;
        q.push(root);
        bparent[size_t(root)] = -1;
        height[size_t(root)] = 0;
        on_tree[size_t(root)] = 1;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (auto [y, e] : fadj[size_t(x)])
                if (!on_tree[size_t(y)]) {
                    on_tree[size_t(y)] = 1;
                    bparent[size_t(y)] = x;
                    height[size_t(y)] = height[size_t(x)] + 1;
                    q.push(y);
                }
        }
    }

    // parity split on min{h(a), h(b)}; keep the larger class (ties: even)
    std::vector<std::pair<Vertex, Vertex>> even, odd;
    for (auto [a, b] : sp.forest_edges) {
        int hm = std::min(height[size_t(a)], height[size_t(b)]);
        if (hm % 2 == 0)
            even.emplace_back(a, b);
        else
            odd.emplace_back(a, b);
    }
    sp.parity_even_size = even.size();
    sp.parity_odd_size = odd.size();
    sp.kept_edges = (odd.size() > even.size()) ? odd : even;

    // stars = components of the kept edges; root = the member with minimum height
    sp.star_of.assign(size_t(n), -1);
    std::vector<std::vector<Vertex>> sadj(static_cast<size_t>(n));
    for (auto [a, b] : sp.kept_edges) {
        sadj[size_t(a)].push_back(b);
        sadj[size_t(b)].push_back(a);
    }
    for (Vertex s = 0; s < n; ++s) {
        if (sp.star_of[size_t(s)] != -1) continue;
        int id = int(sp.star_root.size());
        std::vector<Vertex> members;
        std::queue<Vertex> q;
        sp.star_of[size_t(s)] = id;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            members.push_back(x);
            for (Vertex y : sadj[size_t(x)])
                if (sp.star_of[size_t(y)] == -1) {
                    sp.star_of[size_t(y)] = id;
                    q.push(y);
                }
        }
        Vertex root = members.front();
        for (Vertex x : members)
            if (height[size_t(x)] < height[size_t(root)] ||
                (height[size_t(x)] == height[size_t(root)] && x < root))
                root = x;
        sp.star_root.push_back(root);
    }
    return sp;
}

ForestHierarchy build_forest_hierarchy(const WeightedGraph& g, int levels) {
    const int n = g.n();
    ForestHierarchy fh;
    fh.levels = levels;
    RootedForest f0;
    f0.parent.assign(size_t(n), -1);
    f0.height.assign(size_t(n), 0);
    f0.root_of.assign(size_t(n), 0);
    for (Vertex v = 0; v < n; ++v) f0.root_of[size_t(v)] = v;
    fh.forest.push_back(f0);
    std::vector<int> tree_of(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) tree_of[size_t(v)] = v;
    fh.tree_of.push_back(tree_of);
    fh.tree_counts.push_back(n);

    for (int i = 0; i < levels; ++i) {
        int count = fh.tree_counts.back();
        ContractedGraph cg = contract_by_parts(g, fh.tree_of.back(), count);
        StarPartition sp = boruvka_star_round(cg.graph);

        // F_{i+1}: previous forest edges plus the witness edges of star edges
        const RootedForest& prev = fh.forest.back();
        std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            if (prev.parent[size_t(v)] != -1) {
                adj[size_t(v)].push_back(prev.parent[size_t(v)]);
                adj[size_t(prev.parent[size_t(v)])].push_back(v);
            }
        for (auto [a, b] : sp.kept_edges) {
            EdgeId we = -1;
            auto id = cg.graph.find_edge(a, b);
            we = cg.witness[size_t(*id)];
            const Edge& ge = g.edge(we);
            adj[size_t(ge.u)].push_back(ge.v);
            adj[size_t(ge.v)].push_back(ge.u);
        }
        // roots: for each star, the root of the star-root tree in F_i
        RootedForest next;
        next.parent.assign(size_t(n), -1);
        next.height.assign(size_t(n), -1);
        next.root_of.assign(size_t(n), -1);
        std::vector<int> next_tree(size_t(n), -1);
        std::vector<Vertex> root_of_tree(size_t(count), -1);
        for (Vertex v = 0; v < n; ++v)
            if (prev.parent[size_t(v)] == -1) root_of_tree[size_t(fh.tree_of.back()[size_t(v)])] = v;
        int star_count = int(sp.star_root.size());
        std::vector<Vertex> star_tree_root(size_t(star_count), -1);
        for (int s = 0; s < star_count; ++s)
            star_tree_root[size_t(s)] = root_of_tree[size_t(sp.star_root[size_t(s)])];

        for (int s = 0; s < star_count; ++s) {
            Vertex r = star_tree_root[size_t(s)];
            // BFS over the merged tree from r
            std::queue<Vertex> q;
            next.root_of[size_t(r)] = r;
            next.height[size_t(r)] = 0;
            next_tree[size_t(r)] = s;
            q.push(r);
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                for (Vertex y : adj[size_t(x)]) {
                    if (next_tree[size_t(y)] != -1) continue;
                    next_tree[size_t(y)] = s;
                    next.parent[size_t(y)] = x;
                    next.height[size_t(y)] = next.height[size_t(x)] + 1;
                    next.root_of[size_t(y)] = r;
                    q.push(y);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (next_tree[size_t(v)] == -1) throw std::logic_error("forest merge missed a vertex");
        fh.forest.push_back(std::move(next));
        fh.tree_of.push_back(std::move(next_tree));
        fh.tree_counts.push_back(star_count);
    }
    return fh;
}

// --- oracle queries ------------------------------------------------------------

namespace {

// removes cycles from a contracted-level walk so the expansion sees a simple path
PathRecord simplify_walk(const PathRecord& p) {
    if (p.vertices.size() <= 2) return p;
    std::vector<Vertex> out;
    std::map<Vertex, size_t> pos;
    for (Vertex v : p.vertices) {
        auto it = pos.find(v);
        if (it != pos.end()) {
            while (out.size() > it->second + 1) {
                pos.erase(out.back());
                out.pop_back();
            }
        } else {
            out.push_back(v);
            pos[v] = out.size() - 1;
        }
    }
    PathRecord r;
    r.vertices = std::move(out);
    return r;  // weight recomputed by the caller
}

struct Expanded {
    PathRecord path;
    int t = 0;
    double wq = 0.0;
};

// Lemma-style expansion: route within each tree between consecutive witness
// endpoints, stitched by the witness edges themselves.
Expanded expand_cluster_walk(const WeightedGraph& g, const RootedForest& forest,
                             const std::vector<int>& tree_of, const ContractedGraph& cg,
                             const PathRecord& cluster_walk_in, Vertex u, Vertex v) {
    Expanded out;
    PathRecord cluster_walk = simplify_walk(cluster_walk_in);
    const auto& cw = cluster_walk.vertices;
    out.t = std::max<int>(1, int(cw.size()));
    if (cw.size() <= 1) {
        out.path = tree_route(g, forest, u, v);
        return out;
    }
    double wq = 0.0;
    Vertex cursor = u;
    PathRecord acc;
    acc.vertices.push_back(u);
    for (size_t j = 0; j + 1 < cw.size(); ++j) {
        auto ce = cg.graph.find_edge(Vertex(cw[j]), Vertex(cw[j + 1]));
        if (!ce) throw std::logic_error("cluster walk uses a non-edge of the contracted graph");
        wq += cg.graph.edge(*ce).w;
        const Edge& we = g.edge(cg.witness[size_t(*ce)]);
        Vertex x = we.u, y = we.v;
        if (tree_of[size_t(x)] != int(cw[j])) std::swap(x, y);
        if (tree_of[size_t(x)] != int(cw[j]) || tree_of[size_t(y)] != int(cw[j + 1]))
            throw std::logic_error("witness edge does not join the expected trees");
        acc.append(tree_route(g, forest, cursor, x));
        acc.append_edge(y, we.w);
        cursor = y;
    }
    acc.append(tree_route(g, forest, cursor, v));
    out.path = acc;
    out.wq = wq;
    return out;
}

}  // namespace

std::optional<PathRecord> UnweightedPrdo::query(const WeightedGraph& g, Vertex u, Vertex v,
                                                ClusterQueryStats* stats) const {
    if (u == v) return PathRecord{};
    int cu = clustering.cluster_of[size_t(u)], cv = clustering.cluster_of[size_t(v)];
    PathRecord cluster_walk;
    if (cu != cv) {
        auto q = tz.query(cg.graph, Vertex(cu), Vertex(cv));
        if (!q) return std::nullopt;
        cluster_walk = *q;
    } else {
        cluster_walk.vertices.push_back(Vertex(cu));
    }
    Expanded ex =
        expand_cluster_walk(g, clustering.forest, clustering.cluster_of, cg, cluster_walk, u, v);
    if (stats) {
        stats->cluster_path_len = ex.t;
        stats->cluster_path_weight = ex.wq;
    }
    if (ex.path.hop_count() > ex.t * (2 * k + 1))
        throw std::logic_error("unweighted extraction exceeded its length bound");
    return ex.path;
}

size_t UnweightedPrdo::size_words() const {
    return 3 * clustering.cluster_of.size() + cg.witness.size() + tz.size_words();
}

namespace {
int clamp_tz_k(int k, int n) {
    int cap = int(std::ceil(std::log2(std::max(2, n)))) + 1;
    return std::max(1, std::min(k, cap));
}
}  // namespace

UnweightedPrdo build_unweighted_prdo(const WeightedGraph& g, int k, uint64_t seed) {
    if (!g.unit_weights())
        throw std::invalid_argument("unweighted oracle requires unit edge weights");
    UnweightedPrdo o;
    o.k = k;
    o.clustering = unweighted_clustering(g, k);
    o.cg = contract_by_parts(g, o.clustering.cluster_of, o.clustering.count());
    o.tz = build_tz(o.cg.graph, clamp_tz_k(k, o.cg.graph.n()), seed);
    return o;
}

double WeightedPrdo::declared_stretch() const {
    return std::pow(double(k), std::log(4.0) / std::log(4.0 / 3.0));
}

double WeightedPrdo::extraction_factor() const { return std::pow(3.0, double(l + 1)); }

std::optional<PathRecord> WeightedPrdo::query(const WeightedGraph& g, Vertex u, Vertex v,
                                              ClusterQueryStats* stats) const {
    if (u == v) return PathRecord{};
    const auto& tree_of = hierarchy.tree_of.back();
    int su = tree_of[size_t(u)], sv = tree_of[size_t(v)];
    PathRecord cluster_walk;
    if (su != sv) {
        auto q = tz.query(top.graph, Vertex(su), Vertex(sv));
        if (!q) return std::nullopt;
        cluster_walk = *q;
    } else {
        cluster_walk.vertices.push_back(Vertex(su));
    }
    Expanded ex = expand_cluster_walk(g, hierarchy.forest.back(), tree_of, top, cluster_walk, u, v);
    if (stats) {
        stats->cluster_path_len = ex.t;
        stats->cluster_path_weight = ex.wq;
    }
    return ex.path;
}

size_t WeightedPrdo::size_words() const {
    return 3 * hierarchy.tree_of.back().size() + top.witness.size() + tz.size_words();
}

WeightedPrdo build_weighted_prdo(const WeightedGraph& g, int k, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("weighted oracle: k must be >= 1");
    WeightedPrdo o;
    o.k = k;
    int l = int(std::floor(std::log(double(k)) / std::log(4.0 / 3.0))) - 2;
    o.l = std::max(0, l);
    o.hierarchy = build_forest_hierarchy(g, o.l);
    o.top = contract_by_parts(g, o.hierarchy.tree_of.back(), o.hierarchy.tree_counts.back());
    o.tz = build_tz(o.top.graph, clamp_tz_k(k, o.top.graph.n()), seed);
    return o;
}

}  // namespace spanlab
