#include "spanlab/pairwise.hpp"

#include <algorithm>
#include <stdexcept>

#include "spanlab/shortest_paths.hpp"

namespace spanlab {

namespace {

std::pair<Vertex, Vertex> canon(Vertex u, Vertex v) {
    auto [a, b] = std::minmax(u, v);
    return {a, b};
}

std::vector<EdgeId> sorted_unique_edges(const WeightedGraph& g, std::vector<char>& mark) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (mark[size_t(e)]) out.push_back(e);
    return out;
}

}  // namespace

bool PairwiseOracle::registered(Vertex u, Vertex v) const { return stored.count(canon(u, v)) > 0; }

PathRecord PairwiseOracle::query(const WeightedGraph& g, Vertex u, Vertex v) const {
    auto it = stored.find(canon(u, v));
    if (it == stored.end()) throw std::runtime_error("pair not registered");
    const StoredPath& sp = it->second;
    if (sp.vertices.empty()) return PathRecord{};
    bool forward = sp.vertices.front() == u;

    // assemble in stored orientation, flip at the end if needed
    PathRecord out;
    out.vertices.push_back(sp.vertices.front());
    for (size_t i = 0; i + 1 < sp.vertices.size(); ++i) {
        Vertex x = sp.vertices[i], y = sp.vertices[i + 1];
        uint8_t kind = sp.kind[i];
        PathRecord seg;
        if (kind == 0) {
            auto e = g.find_edge(x, y);
            if (!e) throw std::logic_error("stored path uses a non-edge");
            seg.vertices = {x, y};
            seg.total_weight = g.edge(*e).w;
        } else if (kind == 1 || kind == 2) {
            seg = preserver_path(*hopset, x, y);
            if (seg.vertices.empty()) throw std::logic_error("empty preserver segment");
        } else {
            seg = base->query(g, x, y);
            if (seg.vertices.empty()) throw std::logic_error("empty base segment");
        }
        out.append(seg);
    }
    if (!forward) out = out.reversed();
    return out;
}

size_t PairwiseOracle::path_words() const {
    size_t s = 0;
    for (const auto& [k, p] : stored) s += p.vertices.size();
    return s;
}

size_t PairwiseOracle::preserver_link_words() const {
    if (!hopset || mode != Mode::V2) return 0;
    return hopset->h1_preserver_links() + hopset->h2_preserver_links();
}

size_t PairwiseOracle::size_words() const {
    size_t s = spanner_edges.size() + path_words() + preserver_link_words();
    if (base) s += base->size_words();
    return s;
}

PairwiseOracle exact_preserver(const WeightedGraph& g, const PairSet& pairs) {
    PairwiseOracle o;
    o.mode = PairwiseOracle::Mode::Exact;
    o.declared_stretch = 1.0;
    o.base_stretch = 1.0;

    // one deterministic tree per distinct canonical source
    std::map<Vertex, std::vector<Vertex>> by_source;
    for (auto [u, v] : pairs.pairs) {
        auto [a, b] = canon(u, v);
        by_source[a].push_back(b);
    }
    std::vector<char> mark(size_t(g.m()), 0);
    for (auto& [src, targets] : by_source) {
        SPTree tree = dijkstra(g, src);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (Vertex t : targets) {
            if (!tree.reached(t)) throw std::runtime_error("exact preserver: unreachable pair");
            PathRecord p = tree.path_to(t);
            PairwiseOracle::StoredPath sp;
            sp.vertices = p.vertices;
            sp.kind.assign(p.vertices.size() - 1, 0);
            for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
                mark[size_t(*e)] = 1;
            }
            o.stored[{src, t}] = std::move(sp);
        }
    }
    o.spanner_edges = sorted_unique_edges(g, mark);
    return o;
}

namespace {

// Shared machinery: store a bounded-hop path per pair and tag each hop.
void store_hop_paths(const WeightedGraph& g, const PairSet& pairs, const HopsetParts& parts,
                     PairwiseOracle& o) {
    std::vector<ExtraEdge> extra = parts.as_extra_edges();
    int beta = int(std::min<long long>(parts.beta_budget(), std::max(1, g.n() - 1)));
    std::map<Vertex, std::vector<Vertex>> by_source;
    for (auto [u, v] : pairs.pairs) {
        auto [a, b] = canon(u, v);
        by_source[a].push_back(b);
    }
    std::vector<char> mark(size_t(g.m()), 0);
    for (auto& [src, targets] : by_source) {
        BoundedHopSearch search(g, extra, src, beta);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (Vertex t : targets) {
            auto hp = search.witness(t);
            if (!hp) throw std::runtime_error("pairwise compose: unreachable pair");
            PairwiseOracle::StoredPath sp;
            sp.vertices = hp->path.vertices;
            sp.kind.resize(sp.vertices.empty() ? 0 : sp.vertices.size() - 1, 0);
            for (size_t i = 0; i + 1 < sp.vertices.size(); ++i) {
                Vertex x = sp.vertices[i], y = sp.vertices[i + 1];
                auto ge = g.find_edge(x, y);
                const HopsetEdge* he = parts.find(x, y);
                // prefer the real edge when weights coincide
                if (ge && (!he || g.edge(*ge).w <= he->w)) {
                    sp.kind[i] = 0;
                    mark[size_t(*ge)] = 1;
                } else if (he) {
                    sp.kind[i] = uint8_t(he->part);
                } else {
                    throw std::logic_error("stored hop path uses an unknown edge");
                }
            }
            o.stored[{src, t}] = std::move(sp);
        }
    }
    for (EdgeId e = 0; e < g.m(); ++e)
        if (mark[size_t(e)]) o.spanner_edges.push_back(e);
}

PairSet hopset_as_pairs(const HopsetParts& parts, int min_part) {
    std::vector<std::pair<Vertex, Vertex>> raw;
    for (const HopsetEdge& e : parts.edges)
        if (int(e.part) >= min_part) raw.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    return PairSet::from_pairs(std::move(raw));
}

void merge_spanner_edges(std::vector<EdgeId>& dst, const std::vector<EdgeId>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
    dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
}

}  // namespace

PairwiseOracle compose_hopset(const WeightedGraph& g, const PairSet& pairs,
                              std::shared_ptr<HopsetParts> parts,
                              const PairwiseBuilder& base_builder) {
    PairwiseOracle o;
    o.mode = PairwiseOracle::Mode::Compose;
    o.hopset = parts;
    store_hop_paths(g, pairs, *parts, o);

    PairSet hop_pairs = hopset_as_pairs(*parts, 1);
    o.base = std::make_shared<PairwiseOracle>(base_builder(g, hop_pairs));
    for (const HopsetEdge& e : parts->edges)
        if (!o.base->registered(e.u, e.v))
            throw std::runtime_error("compose: hop edge not covered by the base oracle");
    o.base_stretch = o.base->declared_stretch;
    o.declared_stretch = o.base_stretch * double(parts->stretch_bound());
    merge_spanner_edges(o.spanner_edges, o.base->spanner_edges);
    return o;
}

PairwiseOracle pairwise_v2(const WeightedGraph& g, const PairSet& pairs, int c, int k, double delta,
                           uint64_t seed) {
    auto parts = std::make_shared<HopsetParts>(build_hopset(g, c, k, delta, seed));
    PairwiseOracle o;
    o.mode = PairwiseOracle::Mode::V2;
    o.hopset = parts;
    store_hop_paths(g, pairs, *parts, o);

    PairSet h3_pairs = hopset_as_pairs(*parts, 3);
    o.base = std::make_shared<PairwiseOracle>(exact_preserver(g, h3_pairs));
    o.base_stretch = 1.0;
    o.declared_stretch = o.base_stretch * double(parts->stretch_bound());
    merge_spanner_edges(o.spanner_edges, o.base->spanner_edges);
    merge_spanner_edges(o.spanner_edges, parts->h1_preserver_edges(g));
    merge_spanner_edges(o.spanner_edges, parts->h2_preserver_edges(g));
    return o;
}

}  // namespace spanlab
