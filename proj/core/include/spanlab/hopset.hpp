#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/shortest_paths.hpp"
#include "spanlab/tz_oracle.hpp"

namespace spanlab {

// Level bookkeeping for the hopset hierarchy: f rounds a level up to the next
// multiple of c minus one, and lambda drives the per-level sampling
// probabilities delta * n^(-lambda_i / k).
struct LambdaSchedule {
    int c = 0;
    int k = 0;
    int F = 0;                    // c * ceil(log_{c+1}(k+1))
    std::vector<int64_t> lambda;  // lambda_0 .. lambda_{F-1}

    int f(int i) const { return (i / c) * c + c - 1; }
    int f_inv(int i) const { return (i / c) * c; }

    // ceil((1+1/c)^F * (2c+2)^(2*floor(F/c))), the hop budget
    long long beta_budget() const;
    int stretch_bound() const { return 8 * c + 3; }
};

// Validates 1 < c <= k, evaluates the recurrence
// lambda_0 = 1, lambda_i = 1 + sum_{l < f_inv(i)} lambda_l,
// and cross-checks it against the closed form lambda_{ac+b} = (c+1)^a.
LambdaSchedule lambda_schedule(int c, int k);

double default_hopset_delta(int c, int k);  // k^(-9/(c-1))

enum class HopsetPart : uint8_t { H1 = 1, H2 = 2, H3 = 3 };

struct HopsetEdge {
    Vertex u = -1;       // for H1: the vertex; for H2/H3: the bunch owner
    Vertex v = -1;       // for H1: its pivot; for H2/H3: the bunch member (cluster center)
    double w = 0.0;      // exact graph distance between u and v
    HopsetPart part = HopsetPart::H1;
    int level = 0;       // pivot level i (H1) or bunch level j (H2/H3)
};

// The hopset split into pivot edges (H1), low-level bunch edges (H2, levels
// j < c) and high-level bunch edges (H3, levels j in [c, F-1]), together with
// the path-reporting preservers for H1 and H2. An edge qualifying for several
// parts is stored once, with H1 taking precedence over H2 over H3.
struct HopsetParts {
    int c = 0;
    int k = 0;
    double delta = 0.0;
    LambdaSchedule schedule;
    SampleHierarchy hierarchy;  // truncated at the first empty level
    BunchTable table;           // pivot forests + bunches + cluster trees
    std::vector<HopsetEdge> edges;
    size_t h1_count = 0, h2_count = 0, h3_count = 0;

    long long beta_budget() const { return schedule.beta_budget(); }
    int stretch_bound() const { return schedule.stretch_bound(); }
    std::vector<ExtraEdge> as_extra_edges() const;
    const HopsetEdge* find(Vertex u, Vertex v) const;  // unordered lookup
    void rebuild_index();

    // Preserver link counts (words of parent pointers).
    size_t h1_preserver_links() const;
    size_t h2_preserver_links() const;
    // Graph edges used by the preservers.
    std::vector<EdgeId> h1_preserver_edges(const WeightedGraph& g) const;
    std::vector<EdgeId> h2_preserver_edges(const WeightedGraph& g) const;

private:
    std::unordered_map<uint64_t, uint32_t> edge_index_;
};

HopsetParts build_hopset(const WeightedGraph& g, int c, int k, double delta, uint64_t seed);

// Exact path u -> p_level(u) through the pivot forest.
PathRecord hopset_pivot_path(const HopsetParts& parts, int level, Vertex u);
// Exact path member -> center through the level-j cluster preserver (j < c).
PathRecord hopset_cluster_path(const HopsetParts& parts, Vertex center, Vertex member);
// Dispatch on an H1/H2 edge; errors with "not preserved" otherwise.
PathRecord preserver_path(const HopsetParts& parts, Vertex u, Vertex v);

struct HopsetVerifyReport {
    int stretch_bound = 0;
    long long beta_budget = 0;
    double worst_stretch = 0.0;
    int worst_hops = 0;
    size_t pairs_checked = 0;
    bool ok = true;
    Vertex witness_u = -1, witness_v = -1;  // first violating pair when !ok
};

// Checks d^{(beta)}_{G ∪ H}(u,v) <= (8c+3) d_G(u,v) for every pair.
HopsetVerifyReport verify_hopset(const WeightedGraph& g, const HopsetParts& parts,
                                 const PairSet& pairs);

}  // namespace spanlab
