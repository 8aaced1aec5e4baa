#include "spanlab/girth_instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spanlab/rng.hpp"
#include "spanlab/shortest_paths.hpp"

namespace spanlab {

GirthInstance delta_pairs(const WeightedGraph& g, int k, int alpha) {
    if (!g.unit_weights()) throw std::invalid_argument("delta pairs: graph must be unweighted");
    if (k < 1 || alpha < 1) throw std::invalid_argument("delta pairs: k and alpha must be >= 1");
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("delta pairs: empty graph");

    int degree = int(g.neighbors(0).size());
    for (Vertex v = 0; v < n; ++v)
        if (int(g.neighbors(v).size()) != degree)
            throw std::invalid_argument("delta pairs: graph is not regular");

    auto gi = girth(g);
    if (!gi || *gi <= k)
        throw std::invalid_argument("delta pairs: girth must exceed k (got " +
                                    (gi ? std::to_string(*gi) : std::string("infinite")) + ")");

    GirthInstance inst;
    inst.graph = g;
    inst.p = degree - 1;
    inst.k = k;
    inst.alpha = alpha;
    inst.delta = k / (alpha + 1);
    if (inst.delta < 1) throw std::invalid_argument("delta pairs: floor(k/(alpha+1)) must be >= 1");

    int64_t pw = 1;
    for (int i = 0; i + 1 < inst.delta; ++i) pw *= inst.p;
    inst.expected_coverage = int64_t(inst.delta) * pw;
    inst.expected_pairs = int64_t(n) * int64_t(degree) * pw / 2;

    inst.coverage.assign(size_t(g.m()), 0);
    for (Vertex u = 0; u < n; ++u) {
        PathCount pc = count_shortest_paths(g, u);
        IntSPTree tree = dijkstra_int(g, u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (pc.dist[size_t(v)] != inst.delta) continue;
            if (pc.count[size_t(v)] != 1)
                throw std::runtime_error("delta pairs: pair (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") has a non-unique shortest path");
            PathRecord path = tree.path_to(v);
            inst.pairs.emplace_back(u, v);
            inst.paths.push_back(path.vertices);
            for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
                auto e = g.find_edge(path.vertices[i], path.vertices[i + 1]);
                ++inst.coverage[size_t(*e)];
            }
        }
    }
    inst.coverage_exact =
        int64_t(inst.pairs.size()) == inst.expected_pairs &&
        std::all_of(inst.coverage.begin(), inst.coverage.end(),
                    [&](int64_t c) { return c == inst.expected_coverage; });
    return inst;
}

UnavoidabilityReport check_unavoidable(const GirthInstance& inst) {
    UnavoidabilityReport rep;
    const WeightedGraph& g = inst.graph;
    int64_t bound = int64_t(inst.alpha) * int64_t(inst.delta);
    for (size_t pi = 0; pi < inst.pairs.size(); ++pi) {
        auto [u, v] = inst.pairs[pi];
        const auto& path = inst.paths[pi];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            auto e = g.find_edge(path[i], path[i + 1]);
            IntSPTree td = dijkstra_int(g, u, *e);
            ++rep.checks;
            int64_t nd =
                td.reached(v) ? td.dist[size_t(v)] : std::numeric_limits<int64_t>::max();
            if (nd <= bound) {
                rep.ok = false;
                rep.failure = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") survives deleting an edge of its path within stretch alpha";
                return rep;
            }
        }
    }
    return rep;
}

CoverageReport coverage_experiment(const GirthInstance& inst, double sample_probability, int trials,
                                   uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("coverage experiment: trials must be >= 1");
    if (!(sample_probability >= 0.0) || sample_probability > 1.0)
        throw std::invalid_argument("coverage experiment: probability out of range");
    CoverageReport rep;
    rep.sample_probability = sample_probability;
    rep.trials = trials;
    rep.seed = seed;
    const size_t m = size_t(inst.graph.m());
    double cover_threshold = (1.0 - 2.0 / std::exp(1.0)) * double(m);
    double lo = double(m) / (2.0 * inst.delta), hi = 3.0 * double(m) / (2.0 * inst.delta);

    Rng rng(seed);
    std::vector<char> covered(m);
    for (int t = 0; t < trials; ++t) {
        std::fill(covered.begin(), covered.end(), 0);
        CoverageTrial trial;
        for (size_t pi = 0; pi < inst.pairs.size(); ++pi) {
            if (!rng.bernoulli(sample_probability)) continue;
            ++trial.sampled_pairs;
            const auto& path = inst.paths[pi];
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                auto e = inst.graph.find_edge(path[i], path[i + 1]);
                covered[size_t(*e)] = 1;
            }
        }
        for (char c : covered) trial.covered_edges += size_t(c);
        trial.covered_fraction = m == 0 ? 0.0 : double(trial.covered_edges) / double(m);
        trial.beta_hat = trial.sampled_pairs == 0
                             ? 0.0
                             : double(trial.covered_edges) / double(trial.sampled_pairs);
        trial.coverage_flag = double(trial.covered_edges) >= cover_threshold;
        trial.size_flag =
            double(trial.sampled_pairs) >= lo && double(trial.sampled_pairs) <= hi;
        rep.per_trial.push_back(trial);
    }
    std::vector<double> fractions, betas;
    double sum = 0.0;
    int cover_flags = 0, size_flags = 0;
    for (const auto& t : rep.per_trial) {
        fractions.push_back(t.covered_fraction);
        betas.push_back(t.beta_hat);
        sum += t.covered_fraction;
        cover_flags += t.coverage_flag ? 1 : 0;
        size_flags += t.size_flag ? 1 : 0;
    }
    rep.mean_covered_fraction = sum / double(trials);
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    rep.median_covered_fraction = median(fractions);
    rep.median_beta_hat = median(betas);
    rep.coverage_flag_rate = double(cover_flags) / double(trials);
    rep.size_flag_rate = double(size_flags) / double(trials);
    return rep;
}

}  // namespace spanlab
