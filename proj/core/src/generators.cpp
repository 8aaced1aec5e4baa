#include "spanlab/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spanlab/rng.hpp"

namespace spanlab {

WeightedGraph random_connected_graph(int n, int extra_edges, int weight_max, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph: n must be >= 1");
    if (weight_max < 1) throw std::invalid_argument("random graph: weight_max must be >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> used;
    auto weight = [&]() { return double(1 + rng.uniform(uint64_t(weight_max))); };
    // random spanning tree: attach each vertex to a uniformly random earlier one
    std::vector<Vertex> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[size_t(i)] = Vertex(i);
    rng.shuffle(order);
    for (int i = 1; i < n; ++i) {
        Vertex u = order[size_t(i)];
        Vertex v = order[size_t(rng.uniform(uint64_t(i)))];
        auto key = std::minmax(u, v);
        used.insert({key.first, key.second});
        edges.push_back({u, v, weight()});
    }
    int attempts = 0;
    int added = 0;
    while (added < extra_edges && attempts < 50 * extra_edges + 100) {
        ++attempts;
        Vertex u = Vertex(rng.uniform(uint64_t(n)));
        Vertex v = Vertex(rng.uniform(uint64_t(n)));
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!used.insert({key.first, key.second}).second) continue;
        edges.push_back({key.first, key.second, weight()});
        ++added;
    }
    return WeightedGraph(n, edges);
}

std::optional<WeightedGraph> random_regular_graph(int n, int degree, int min_girth, uint64_t seed,
                                                  int max_attempts) {
    if (n * degree % 2 != 0) throw std::invalid_argument("n * degree must be even");
    if (degree < 1 || degree >= n) throw std::invalid_argument("bad degree");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<Vertex, Vertex>> used;
        std::vector<Edge> edges;
        bool ok = true;
        for (size_t i = 0; i < stubs.size(); i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            auto key = std::minmax(u, v);
            if (!used.insert({key.first, key.second}).second) {
                ok = false;
                break;
            }
            edges.push_back({key.first, key.second, 1.0});
        }
        if (!ok) continue;
        WeightedGraph g(n, edges);
        if (min_girth > 0) {
            auto gi = girth(g);
            if (gi && *gi <= min_girth) continue;
        }
        return g;
    }
    return std::nullopt;
}

namespace {
WeightedGraph lcf_graph(int n, const std::vector<int>& jumps) {
    // cycle 0..n-1 plus chords i -> i + jumps[i mod |jumps|]
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % n), 1.0});
    for (int i = 0; i < n; ++i) {
        int j = jumps[size_t(i) % jumps.size()];
        int to = ((i + j) % n + n) % n;
        edges.push_back({Vertex(i), Vertex(to), 1.0});
    }
    return WeightedGraph(n, edges);  // duplicate chords collapse
}
}  // namespace

WeightedGraph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({Vertex(i), Vertex((i + 1) % 5), 1.0});          // outer cycle
        edges.push_back({Vertex(5 + i), Vertex(5 + (i + 2) % 5), 1.0});  // inner pentagram
        edges.push_back({Vertex(i), Vertex(5 + i), 1.0});                // spokes
    }
    return WeightedGraph(10, edges);
}

WeightedGraph heawood_graph() { return lcf_graph(14, {5, -5}); }

WeightedGraph mcgee_graph() { return lcf_graph(24, {12, 7, -7}); }

std::vector<Vertex> random_ranking(int n, uint64_t seed) {
    std::vector<Vertex> rank(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rank[size_t(i)] = Vertex(i);
    Rng rng(seed);
    rng.shuffle(rank);
    return rank;
}

std::vector<std::pair<Vertex, Vertex>> random_pairs(const WeightedGraph& g, int n_pairs,
                                                    uint64_t seed) {
    std::vector<int> comp = components(g);
    Rng rng(seed);
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<std::pair<Vertex, Vertex>> out;
    int attempts = 0;
    while (int(out.size()) < n_pairs && attempts < 200 * n_pairs + 1000) {
        ++attempts;
        Vertex u = Vertex(rng.uniform(uint64_t(g.n())));
        Vertex v = Vertex(rng.uniform(uint64_t(g.n())));
        if (u == v || comp[size_t(u)] != comp[size_t(v)]) continue;
        auto key = std::minmax(u, v);
        if (!used.insert({key.first, key.second}).second) continue;
        out.emplace_back(key.first, key.second);
    }
    return out;
}

}  // namespace spanlab
