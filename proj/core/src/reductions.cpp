#include "spanlab/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spanlab/rng.hpp"
#include "spanlab/shortest_paths.hpp"

namespace spanlab {

bool SubsetOracle::in_subset(Vertex v) const {
    return std::binary_search(subset.begin(), subset.end(), v);
}

PathRecord SubsetOracle::query(const WeightedGraph& g, Vertex a, Vertex b) const {
    if (!in_subset(a) || !in_subset(b))
        throw std::runtime_error("subset query: endpoint outside the subset");
    PathRecord out;
    if (a == b) return out;
    auto em = emulator.query(a, b);
    if (!em) throw std::runtime_error("subset query: endpoints in different components");
    // expand every emulator edge through the pairwise oracle
    out.vertices.push_back(a);
    for (size_t i = 0; i + 1 < em->vertices.size(); ++i) {
        Vertex x = em->vertices[i], y = em->vertices[i + 1];
        out.append(pairwise.query(g, x, y));
    }
    return out;
}

size_t SubsetOracle::size_words() const {
    return subset.size() + emulator.oracle.size_words() + pairwise.size_words();
}

SubsetOracle subset_spanner(const WeightedGraph& g, const std::vector<Vertex>& subset_in,
                            int k_emulator, uint64_t seed) {
    if (subset_in.empty()) throw std::invalid_argument("subset spanner: empty subset");
    SubsetOracle o;
    o.subset = subset_in;
    std::sort(o.subset.begin(), o.subset.end());
    o.subset.erase(std::unique(o.subset.begin(), o.subset.end()), o.subset.end());
    o.emulator_k = k_emulator;

    // exact all-pairs distances over the subset
    const size_t m = o.subset.size();
    std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i) {
        SPTree t = dijkstra(g, o.subset[i]);
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (!t.reached(o.subset[j]))
                throw std::runtime_error("subset spanner: subset spans several components");
            dist[i][j] = t.distance(o.subset[j]);
        }
    }
    o.emulator = build_tz_emulator(o.subset, dist, k_emulator, seed);

    // the emulator edge set, viewed as pairs of the host graph
    std::vector<std::pair<Vertex, Vertex>> raw;
    for (const Edge& e : o.emulator.emulator_edges_original) raw.emplace_back(e.u, e.v);
    if (raw.empty()) {
        o.pairwise = PairwiseOracle{};  // single-point subset
    } else {
        o.pairwise = exact_preserver(g, PairSet::from_pairs(std::move(raw)));
    }
    o.declared_stretch = double(2 * k_emulator - 1) * o.pairwise.declared_stretch;
    if (o.pairwise.stored.empty()) o.declared_stretch = double(2 * k_emulator - 1);
    return o;
}

PathRecord SourcewiseOracle::nearest_source_path(Vertex v) const {
    PathRecord p;
    Vertex target = nearest[size_t(v)];
    if (target == -1) throw std::runtime_error("no source in this component");
    if (v == target) return p;
    p.vertices.push_back(v);
    Vertex x = v;
    while (x != target) {
        x = link[size_t(x)];
        if (x == -1) throw std::logic_error("broken nearest-source link");
        p.vertices.push_back(x);
    }
    p.total_weight = nearest_dist[size_t(v)];
    return p;
}

PathRecord SourcewiseOracle::query(const WeightedGraph& g, Vertex v, Vertex a) const {
    if (!subset.in_subset(a)) throw std::runtime_error("source-wise query: second endpoint not a source");
    PathRecord out = nearest_source_path(v);
    Vertex pv = nearest[size_t(v)];
    if (out.vertices.empty() && v != a) {
        out.vertices.push_back(v);  // v is its own nearest source
    }
    if (pv == a) {
        if (out.vertices.size() == 1) out.vertices.clear();
        return out;
    }
    PathRecord tail = subset.query(g, pv, a);
    if (out.vertices.empty())
        return tail;
    out.append(tail);
    return out;
}

size_t SourcewiseOracle::size_words() const {
    return subset.size_words() + 2 * nearest.size();
}

SourcewiseOracle sourcewise_spanner(const WeightedGraph& g, SubsetOracle subset) {
    SourcewiseOracle o;
    o.declared_stretch = 2.0 * subset.declared_stretch + 1.0;
    MultiSourceTree ms = multi_source_dijkstra(g, subset.subset);
    o.subset = std::move(subset);
    o.nearest = ms.owner;
    o.link = ms.parent;
    o.nearest_dist = ms.dist;
    // orient links towards the owner (multi-source parents already do)
    return o;
}

int64_t prefix_size(PrefixPreset preset, int n, int i) {
    if (i < 1) throw std::invalid_argument("prefix index must be >= 1");
    double expo = (preset == PrefixPreset::Pow2) ? 1.0 - std::pow(0.5, double(i))
                                                 : 1.0 - 1.0 / double(i);
    int64_t v = int64_t(std::floor(std::pow(double(n), expo) * (1.0 + 1e-12)));
    return std::max<int64_t>(1, std::min<int64_t>(v, n));
}

int default_prefix_count(PrefixPreset preset, int n) {
    if (preset == PrefixPreset::Pow2) {
        int t = int(std::floor(std::log2(std::max(2.0, std::log2(double(std::max(4, n)))))));
        return std::max(1, t);
    }
    return std::max(1, int(std::floor(std::log2(double(std::max(2, n))))));
}

double PrioritizedOracle::stretch_for_rank(int rank) const {
    if (!f_values.empty() && rank <= int(f_values.back())) {
        int i = f_inverse[size_t(rank - 1)];
        return prefixes[size_t(i - 1)].declared_stretch;
    }
    return double(2 * fallback_k - 1);
}

PrioritizedOracle::Answer PrioritizedOracle::query(const WeightedGraph& g, Vertex x,
                                                   Vertex y) const {
    if (x == y) return {PathRecord{}, -1, 1.0};
    int jx = rank_of[size_t(x)], jy = rank_of[size_t(y)];
    // the higher-priority endpoint (smaller rank) drives the dispatch
    Vertex a = (jx < jy) ? x : y;
    Vertex v = (jx < jy) ? y : x;
    int j = std::min(jx, jy);
    Answer ans;
    if (!f_values.empty() && j <= int(f_values.back())) {
        int i = f_inverse[size_t(j - 1)];
        ans.dispatch_prefix = i;
        ans.declared_stretch = prefixes[size_t(i - 1)].declared_stretch;
        ans.path = prefixes[size_t(i - 1)].query(g, v, a);
    } else {
        ans.dispatch_prefix = -1;
        ans.declared_stretch = double(2 * fallback_k - 1);
        auto p = fallback.query(g, v, a);
        if (!p) throw std::runtime_error("prioritized query: endpoints in different components");
        ans.path = *p;
    }
    if (!ans.path.vertices.empty() && ans.path.vertices.front() != x) ans.path = ans.path.reversed();
    return ans;
}

size_t PrioritizedOracle::size_words() const {
    size_t s = ranking.size() + f_inverse.size() + fallback.size_words();
    for (const auto& p : prefixes) s += p.size_words();
    return s;
}

PrioritizedOracle prioritized_spanner(const WeightedGraph& g, const std::vector<Vertex>& ranking,
                                      PrefixPreset preset, int T, uint64_t seed) {
    const int n = g.n();
    if (int(ranking.size()) != n) throw std::invalid_argument("ranking is not a permutation");
    std::vector<char> seen(size_t(n), 0);
    for (Vertex v : ranking) {
        if (v < 0 || v >= n || seen[size_t(v)])
            throw std::invalid_argument("ranking is not a permutation");
        seen[size_t(v)] = 1;
    }
    PrioritizedOracle o;
    o.ranking = ranking;
    o.rank_of.assign(size_t(n), 0);
    for (int j = 0; j < n; ++j) o.rank_of[size_t(ranking[size_t(j)])] = j + 1;
    o.preset = preset;
    if (T <= 0) T = default_prefix_count(preset, n);
    o.T = T;

    Rng seeder(seed);
    double log_n = std::log(double(std::max(2, n)));
    for (int i = 1; i <= T; ++i) {
        int64_t f = prefix_size(preset, n, i);
        o.f_values.push_back(f);
        std::vector<Vertex> prefix(ranking.begin(), ranking.begin() + f);
        double log_a = std::log(double(f));
        int k;
        if (f >= n || log_n - log_a <= 0.0) {
            k = std::max(1, int(std::ceil(std::log2(double(std::max(2, n))))));
        } else {
            k = int(std::ceil(log_a / (log_n - log_a)));
            k = std::max(1, std::min(k, int(std::ceil(std::log2(double(std::max(2, n))))) + 1));
        }
        o.prefix_k.push_back(k);
        SubsetOracle sub = subset_spanner(g, prefix, k, seeder.next_u64());
        o.prefixes.push_back(sourcewise_spanner(g, std::move(sub)));
    }
    // f must be monotone for the dispatch table
    for (size_t i = 1; i < o.f_values.size(); ++i)
        if (o.f_values[i] < o.f_values[i - 1]) throw std::logic_error("prefix sizes not monotone");
    int64_t fT = o.f_values.back();
    o.f_inverse.assign(size_t(fT), 0);
    for (int64_t j = 1; j <= fT; ++j) {
        int i = 1;
        while (o.f_values[size_t(i - 1)] < j) ++i;
        o.f_inverse[size_t(j - 1)] = i;
    }
    o.fallback_k = std::max(1, int(std::ceil(std::log2(double(std::max(2, n))))));
    o.fallback = build_tz(g, o.fallback_k, seeder.next_u64());
    return o;
}

}  // namespace spanlab
