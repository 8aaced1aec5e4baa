#include "spanlab/tz_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spanlab/rng.hpp"

namespace spanlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SampleHierarchy sample_hierarchy(int n, int k, double per_level_probability, uint64_t seed) {
    return sample_hierarchy(n, std::vector<double>(size_t(std::max(0, k - 1)), per_level_probability),
                            seed);
}

SampleHierarchy sample_hierarchy(int n, const std::vector<double>& probabilities, uint64_t seed) {
    SampleHierarchy h;
    h.requested_levels = int(probabilities.size()) + 1;
    h.seed = seed;
    h.probabilities = probabilities;
    std::vector<Vertex> level(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) level[size_t(v)] = v;
    h.levels.push_back(level);
    Rng rng(seed);
    for (double p : probabilities) {
        if (!(p >= 0.0) || p > 1.0) throw std::invalid_argument("sampling probability out of range");
        std::vector<Vertex> next;
        for (Vertex v : h.levels.back())
            if (rng.bernoulli(p)) next.push_back(v);
        if (next.empty()) break;  // truncate at the first empty level
        h.levels.push_back(std::move(next));
    }
    return h;
}

bool BunchTable::in_bunch(Vertex of, Vertex member) const {
    const auto& b = bunch[size_t(of)];
    auto it = std::lower_bound(b.begin(), b.end(), member,
                               [](const auto& e, Vertex m) { return e.first < m; });
    return it != b.end() && it->first == member;
}

double BunchTable::bunch_dist(Vertex of, Vertex member) const {
    const auto& b = bunch[size_t(of)];
    auto it = std::lower_bound(b.begin(), b.end(), member,
                               [](const auto& e, Vertex m) { return e.first < m; });
    if (it == b.end() || it->first != member) return kInf;
    return it->second;
}

const ClusterEntry* BunchTable::cluster_entry(Vertex center, Vertex member) const {
    const auto& c = cluster[size_t(center)];
    auto it = std::lower_bound(c.begin(), c.end(), member,
                               [](const auto& e, Vertex m) { return e.first < m; });
    if (it == c.end() || it->first != member) return nullptr;
    return &it->second;
}

PathRecord BunchTable::cluster_path(Vertex center, Vertex member) const {
    PathRecord p;
    const ClusterEntry* e = cluster_entry(center, member);
    if (e == nullptr) throw std::runtime_error("vertex outside the queried cluster");
    if (member == center) return p;
    p.vertices.push_back(member);
    Vertex x = member;
    const ClusterEntry* cur = e;
    while (cur->parent != -1) {
        x = cur->parent;
        p.vertices.push_back(x);
        cur = cluster_entry(center, x);
        if (cur == nullptr) throw std::logic_error("broken cluster tree link");
    }
    p.total_weight = e->dist;
    return p;
}

PathRecord BunchTable::pivot_path(int level, Vertex v) const {
    if (level < 0 || level >= int(pivot.size())) throw std::invalid_argument("bad pivot level");
    PathRecord p;
    Vertex w = pivot[size_t(level)][size_t(v)];
    if (w == -1) throw std::runtime_error("no pivot at this level in the vertex's component");
    if (w == v) return p;
    p.vertices.push_back(v);
    Vertex x = v;
    while (x != w) {
        x = pivot_parent[size_t(level)][size_t(x)];
        if (x == -1) throw std::logic_error("broken pivot forest link");
        p.vertices.push_back(x);
    }
    p.total_weight = pivot_dist[size_t(level)][size_t(v)];
    return p;
}

size_t BunchTable::bunch_entries() const {
    size_t s = 0;
    for (const auto& b : bunch) s += b.size();
    return s;
}

size_t BunchTable::cluster_entries() const {
    size_t s = 0;
    for (const auto& c : cluster) s += c.size();
    return s;
}

BunchTable build_bunch_table(const WeightedGraph& g, const SampleHierarchy& h) {
    const int n = g.n();
    const int depth = h.depth();
    BunchTable t;
    t.pivot.assign(size_t(depth), std::vector<Vertex>(size_t(n), -1));
    t.pivot_dist.assign(size_t(depth), std::vector<double>(size_t(n), kInf));
    t.pivot_parent.assign(size_t(depth), std::vector<Vertex>(size_t(n), -1));
    t.level_of.assign(size_t(n), 0);
    t.bunch.assign(size_t(n), {});
    t.cluster.assign(size_t(n), {});

    for (int i = 0; i < depth; ++i) {
        MultiSourceTree ms = multi_source_dijkstra(g, h.levels[size_t(i)]);
        for (Vertex v = 0; v < n; ++v) {
            t.pivot[size_t(i)][size_t(v)] = ms.owner[size_t(v)];
            t.pivot_dist[size_t(i)][size_t(v)] = ms.reached(v) ? ms.dist[size_t(v)] : kInf;
            t.pivot_parent[size_t(i)][size_t(v)] = ms.parent[size_t(v)];
        }
        for (Vertex v : h.levels[size_t(i)]) t.level_of[size_t(v)] = i;
    }
    // inherit pivots downwards on distance ties, so that u is always in the
    // cluster of p_i(u)
    for (int i = depth - 2; i >= 0; --i) {
        for (Vertex v = 0; v < n; ++v) {
            if (t.pivot[size_t(i + 1)][size_t(v)] == -1) continue;
            if (t.pivot_dist[size_t(i)][size_t(v)] >= t.pivot_dist[size_t(i + 1)][size_t(v)]) {
                t.pivot[size_t(i)][size_t(v)] = t.pivot[size_t(i + 1)][size_t(v)];
                t.pivot_dist[size_t(i)][size_t(v)] = t.pivot_dist[size_t(i + 1)][size_t(v)];
                t.pivot_parent[size_t(i)][size_t(v)] = t.pivot_parent[size_t(i + 1)][size_t(v)];
            }
        }
    }

    // clusters by restricted search from every center, bunches by inversion
    for (Vertex w = 0; w < n; ++w) {
        int j = t.level_of[size_t(w)];
        const std::vector<double>* threshold =
            (j + 1 < depth) ? &t.pivot_dist[size_t(j + 1)] : nullptr;
        SPTree tree = dijkstra_restricted(g, w, [&](Vertex x, double d) {
            return threshold == nullptr || d < (*threshold)[size_t(x)];
        });
        auto& members = t.cluster[size_t(w)];
        for (Vertex x = 0; x < n; ++x) {
            if (!(x == w || tree.parent[size_t(x)] != -1)) continue;
            if (tree.dist[size_t(x)] == kInf) continue;
            members.emplace_back(x, ClusterEntry{tree.parent[size_t(x)], tree.dist[size_t(x)],
                                                 tree.hops[size_t(x)]});
        }
        for (const auto& [x, entry] : members) t.bunch[size_t(x)].emplace_back(w, entry.dist);
    }
    for (auto& b : t.bunch) std::sort(b.begin(), b.end());
    return t;
}

namespace {

std::vector<EdgeId> collect_cluster_tree_edges(const WeightedGraph& g, const BunchTable& t) {
    std::vector<char> mark(size_t(g.m()), 0);
    for (Vertex w = 0; w < g.n(); ++w) {
        for (const auto& [x, e] : t.cluster[size_t(w)]) {
            if (e.parent == -1) continue;
            auto id = g.find_edge(x, e.parent);
            if (!id) throw std::logic_error("cluster tree uses a non-edge");
            mark[size_t(*id)] = 1;
        }
    }
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (mark[size_t(e)]) edges.push_back(e);
    return edges;
}

}  // namespace

TZOracle build_tz(const WeightedGraph& g, int k, uint64_t seed) {
    const int n = g.n();
    if (k < 1) throw std::invalid_argument("build_tz: k must be >= 1");
    int kmax = int(std::ceil(std::log2(std::max(2, n)))) + 1;
    if (k > kmax) throw std::invalid_argument("build_tz: k exceeds ceil(log2 n) + 1");
    TZOracle o;
    double p = (n > 1) ? std::pow(double(n), -1.0 / double(k)) : 0.5;
    o.hierarchy = sample_hierarchy(n, k, p, seed);
    o.table = build_bunch_table(g, o.hierarchy);
    o.spanner_edges = collect_cluster_tree_edges(g, o.table);
    o.declared_k = k;
    return o;
}

std::optional<PathRecord> TZOracle::query(const WeightedGraph& g, Vertex u, Vertex v) const {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw std::invalid_argument("tz query: bad vertex");
    PathRecord out;
    if (u == v) return out;
    const int depth = hierarchy.depth();
    Vertex x = u, y = v;
    Vertex w = x;  // p_0(x) = x
    int i = 0;
    while (!table.in_bunch(y, w)) {
        ++i;
        if (i >= depth) return std::nullopt;  // different components
        std::swap(x, y);
        w = table.pivot[size_t(i)][size_t(x)];
        if (w == -1) return std::nullopt;
    }
    // x -> w along w's cluster tree, then w -> y
    PathRecord joined = table.cluster_path(w, x);  // empty when x == w
    if (joined.vertices.empty()) joined.vertices.push_back(w);
    PathRecord back = table.cluster_path(w, y).reversed();  // w -> y, empty when y == w
    if (!back.vertices.empty()) joined.append(back);
    if (joined.vertices.front() != u) joined = joined.reversed();
    if (joined.vertices.size() == 1) joined.vertices.clear();
    return joined;
}

size_t TZOracle::size_words() const {
    size_t pivots = 0;
    for (const auto& lv : table.pivot) pivots += 2 * lv.size();
    return pivots + 2 * table.bunch_entries() + 3 * table.cluster_entries();
}

// --- emulator -----------------------------------------------------------------

TZEmulator build_tz_emulator(const std::vector<Vertex>& points,
                             const std::vector<std::vector<double>>& dist, int k, uint64_t seed,
                             double tolerance) {
    const size_t m = points.size();
    if (m == 0) throw std::invalid_argument("emulator: empty point set");
    if (dist.size() != m) throw std::invalid_argument("emulator: distance matrix shape mismatch");
    for (const auto& row : dist)
        if (row.size() != m) throw std::invalid_argument("emulator: distance matrix shape mismatch");
    for (size_t i = 0; i < m; ++i) {
        if (dist[i][i] != 0.0) throw std::invalid_argument("emulator: nonzero diagonal");
        for (size_t j = 0; j < m; ++j) {
            if (i != j && !(dist[i][j] > 0.0))
                throw std::invalid_argument("emulator: non-positive off-diagonal distance");
            if (std::abs(dist[i][j] - dist[j][i]) > tolerance)
                throw std::invalid_argument("emulator: asymmetric distances");
        }
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < m; ++l)
                if (dist[i][j] > dist[i][l] + dist[l][j] + tolerance)
                    throw std::invalid_argument("emulator: triangle inequality violated");

    TZEmulator em;
    em.points = points;
    std::vector<Edge> complete;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) complete.push_back({Vertex(i), Vertex(j), dist[i][j]});
    WeightedGraph K(int(m), complete);
    em.oracle = build_tz(K, k, seed);

    std::vector<Edge> kept;
    for (EdgeId e : em.oracle.spanner_edges) kept.push_back(K.edge(e));
    em.emulator = WeightedGraph(int(m), kept);
    for (const Edge& e : kept)
        em.emulator_edges_original.push_back(
            {points[size_t(e.u)], points[size_t(e.v)], e.w});
    // queries must run against the graph the oracle was built on
    em.oracle.spanner_edges.clear();
    for (EdgeId e = 0; e < em.emulator.m(); ++e) em.oracle.spanner_edges.push_back(e);

    return em;
}

std::optional<PathRecord> TZEmulator::query(Vertex a, Vertex b) const {
    auto index_of = [&](Vertex v) -> int {
        auto it = std::find(points.begin(), points.end(), v);
        if (it == points.end()) throw std::invalid_argument("emulator query: vertex not in point set");
        return int(it - points.begin());
    };
    int ia = index_of(a), ib = index_of(b);
    auto p = oracle.query(emulator, Vertex(ia), Vertex(ib));
    if (!p) return std::nullopt;
    for (Vertex& v : p->vertices) v = points[size_t(v)];
    return p;
}

}  // namespace spanlab
