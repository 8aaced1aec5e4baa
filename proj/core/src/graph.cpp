#include "spanlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace spanlab {

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<size_t>(n));
    // collapse parallel edges to the lightest; keep first occurrence order
    std::map<std::pair<Vertex, Vertex>, size_t> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!(e.w > 0.0)) throw std::invalid_argument("non-positive edge weight");
        auto key = std::minmax(e.u, e.v);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, edges_.size());
            edges_.push_back({key.first, key.second, e.w});
        } else if (e.w < edges_[it->second].w) {
            edges_[it->second].w = e.w;
        }
    }
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adj_[size_t(e.u)].push_back({e.v, e.w, EdgeId(id)});
        adj_[size_t(e.v)].push_back({e.u, e.w, EdgeId(id)});
        if (e.w != std::floor(e.w) || e.w > 9.0e15) integer_weights_ = false;
        if (e.w != 1.0) unit_weights_ = false;
    }
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
    for (const AdjEntry& a : adj_[size_t(u)])
        if (a.to == v) return a.edge;
    return std::nullopt;
}

void PathRecord::append(const PathRecord& tail) {
    if (tail.vertices.empty()) return;
    if (vertices.empty()) {
        *this = tail;
        return;
    }
    if (vertices.back() != tail.vertices.front())
        throw std::logic_error("path concatenation endpoints do not match");
    vertices.insert(vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
    total_weight += tail.total_weight;
}

void PathRecord::append_edge(Vertex to, double w) {
    if (vertices.empty()) throw std::logic_error("append_edge on empty path");
    vertices.push_back(to);
    total_weight += w;
}

PathRecord PathRecord::reversed() const {
    PathRecord r = *this;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::optional<std::string> check_walk(const WeightedGraph& g, const PathRecord& p,
                                      Vertex from, Vertex to, double tol) {
    if (p.vertices.empty()) {
        if (from != to) return "empty walk for distinct endpoints";
        if (p.total_weight != 0.0) return "empty walk with nonzero weight";
        return std::nullopt;
    }
    if (p.vertices.front() != from) return "walk starts at the wrong vertex";
    if (p.vertices.back() != to) return "walk ends at the wrong vertex";
    double w = 0.0;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
        if (!e) return "walk uses a non-edge at step " + std::to_string(i);
        w += g.edge(*e).w;
    }
    if (std::abs(w - p.total_weight) > tol * std::max(1.0, std::abs(w)))
        return "walk weight mismatch: stored " + std::to_string(p.total_weight) +
               " recomputed " + std::to_string(w);
    return std::nullopt;
}

PairSet PairSet::from_pairs(std::vector<std::pair<Vertex, Vertex>> raw) {
    PairSet ps;
    std::unordered_set<uint64_t> seen;
    seen.reserve(raw.size() * 2);
    for (auto [u, v] : raw) {
        if (u == v) throw std::invalid_argument("pair with equal endpoints");
        auto key = std::minmax(u, v);
        uint64_t packed = (uint64_t(uint32_t(key.first)) << 32) | uint64_t(uint32_t(key.second));
        if (seen.insert(packed).second) ps.pairs.emplace_back(u, v);
    }
    return ps;
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back({no, line.substr(a, b - a + 1)});
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_weight(double w) {
    if (w == std::floor(w) && std::abs(w) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", w);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

}  // namespace

WeightedGraph load_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::runtime_error("empty edge-list document");
    std::istringstream head(lines[0].text);
    std::string tag;
    long long n = -1;
    if (!(head >> tag >> n) || tag != "n" || n < 0)
        parse_fail(lines[0].number, "expected header \"n <count>\"");
    std::vector<Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i].text);
        long long u, v;
        double w;
        std::string trailing;
        if (!(ls >> u >> v >> w) || (ls >> trailing))
            parse_fail(lines[i].number, "expected \"u v w\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lines[i].number, "vertex id out of range");
        if (u == v) parse_fail(lines[i].number, "self-loop");
        if (!(w > 0.0)) parse_fail(lines[i].number, "non-positive weight");
        edges.push_back({Vertex(u), Vertex(v), w});
    }
    return WeightedGraph(int(n), edges);
}

WeightedGraph load_graph_file(const std::string& path) { return load_graph(read_file(path)); }

std::string serialize_graph(const WeightedGraph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_weight(e.w) + "\n";
    return out;
}

PairSet load_pairs(const std::string& text, const WeightedGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> raw;
    for (const Line& ln : content_lines(text)) {
        std::istringstream ls(ln.text);
        long long u, v;
        std::string trailing;
        if (!(ls >> u >> v) || (ls >> trailing)) parse_fail(ln.number, "expected \"u v\"");
        if (!g.valid_vertex(Vertex(u)) || !g.valid_vertex(Vertex(v)))
            parse_fail(ln.number, "vertex id out of range");
        if (u == v) parse_fail(ln.number, "pair with equal endpoints");
        raw.emplace_back(Vertex(u), Vertex(v));
    }
    return PairSet::from_pairs(std::move(raw));
}

PairSet load_pairs_file(const std::string& path, const WeightedGraph& g) {
    return load_pairs(read_file(path), g);
}

std::string serialize_pairs(const PairSet& ps) {
    std::string out;
    for (auto [u, v] : ps.pairs) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<Vertex> load_ranking(const std::string& text, const WeightedGraph& g) {
    std::vector<Vertex> rank;
    std::vector<char> used(size_t(g.n()), 0);
    for (const Line& ln : content_lines(text)) {
        std::istringstream ls(ln.text);
        long long v;
        std::string trailing;
        if (!(ls >> v) || (ls >> trailing)) parse_fail(ln.number, "expected a vertex id");
        if (!g.valid_vertex(Vertex(v))) parse_fail(ln.number, "vertex id out of range");
        if (used[size_t(v)]) parse_fail(ln.number, "duplicate vertex in ranking");
        used[size_t(v)] = 1;
        rank.push_back(Vertex(v));
    }
    if (int(rank.size()) != g.n())
        throw std::runtime_error("ranking is not a permutation of the vertex set");
    return rank;
}

std::vector<Vertex> load_ranking_file(const std::string& path, const WeightedGraph& g) {
    return load_ranking(read_file(path), g);
}

std::optional<int> girth(const WeightedGraph& g) {
    // BFS from every vertex; the minimum over roots of the first cross-edge
    // cycle estimate is exact.
    const int n = g.n();
    int best = INT32_MAX;
    std::vector<int> depth(static_cast<size_t>(n)), parent_edge(static_cast<size_t>(n));
    for (Vertex r = 0; r < n; ++r) {
        std::fill(depth.begin(), depth.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<Vertex> q;
        depth[size_t(r)] = 0;
        q.push(r);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (2 * depth[size_t(x)] >= best) break;
            for (const AdjEntry& a : g.neighbors(x)) {
                if (a.edge == parent_edge[size_t(x)]) continue;
                if (depth[size_t(a.to)] == -1) {
                    depth[size_t(a.to)] = depth[size_t(x)] + 1;
                    parent_edge[size_t(a.to)] = a.edge;
                    q.push(a.to);
                } else {
                    best = std::min(best, depth[size_t(x)] + depth[size_t(a.to)] + 1);
                }
            }
        }
    }
    if (best == INT32_MAX) return std::nullopt;
    return best;
}

std::vector<int> components(const WeightedGraph& g) {
    std::vector<int> comp(size_t(g.n()), -1);
    int c = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[size_t(s)] != -1) continue;
        std::queue<Vertex> q;
        comp[size_t(s)] = c;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (const AdjEntry& a : g.neighbors(x))
                if (comp[size_t(a.to)] == -1) {
                    comp[size_t(a.to)] = c;
                    q.push(a.to);
                }
        }
        ++c;
    }
    return comp;
}

bool same_component(const WeightedGraph& g, Vertex u, Vertex v) {
    auto comp = components(g);
    return comp[size_t(u)] == comp[size_t(v)];
}

}  // namespace spanlab
