#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/pairwise.hpp"
#include "spanlab/tz_oracle.hpp"

namespace spanlab {

// Subset oracle: emulator over A expanded edge-by-edge through a pairwise
// oracle on the host graph. Declared stretch = emulator stretch * pairwise
// stretch (the pairwise side is an exact preserver here, so t = 1).
struct SubsetOracle {
    std::vector<Vertex> subset;  // sorted
    TZEmulator emulator;
    PairwiseOracle pairwise;  // over the emulator edge set as pairs
    int emulator_k = 0;
    double declared_stretch = 0.0;

    bool in_subset(Vertex v) const;
    // both endpoints must belong to the subset
    PathRecord query(const WeightedGraph& g, Vertex a, Vertex b) const;
    size_t size_words() const;
};

SubsetOracle subset_spanner(const WeightedGraph& g, const std::vector<Vertex>& subset,
                            int k_emulator, uint64_t seed);

// Source-wise oracle: nearest-source forest in front of a subset oracle.
// query(v, a) = path(v -> p(v)) followed by the subset answer p(v) -> a.
struct SourcewiseOracle {
    SubsetOracle subset;
    std::vector<Vertex> nearest;       // p(v); -1 outside the sources' component
    std::vector<Vertex> link;          // next vertex towards p(v)
    std::vector<double> nearest_dist;
    double declared_stretch = 0.0;  // 2*alpha + 1

    PathRecord nearest_source_path(Vertex v) const;  // v -> p(v)
    PathRecord query(const WeightedGraph& g, Vertex v, Vertex a) const;
    size_t size_words() const;
};

SourcewiseOracle sourcewise_spanner(const WeightedGraph& g, SubsetOracle subset);

// Prioritized oracle: prefix source-wise oracles over the top-ranked
// vertices, with a global TZ fallback for low ranks.
enum class PrefixPreset { Pow2, Harmonic };

struct PrioritizedOracle {
    std::vector<Vertex> ranking;  // ranking[j-1] = v_j
    std::vector<int> rank_of;     // rank (1-based) per vertex
    PrefixPreset preset = PrefixPreset::Pow2;
    int T = 0;
    std::vector<int64_t> f_values;           // f(1..T)
    std::vector<int> f_inverse;              // f_inverse[j-1] for j in 1..f(T)
    std::vector<SourcewiseOracle> prefixes;  // one per i in 1..T
    std::vector<int> prefix_k;               // emulator k per prefix
    TZOracle fallback;
    int fallback_k = 0;

    // rank of the higher-priority endpoint decides the dispatch
    struct Answer {
        PathRecord path;
        int dispatch_prefix = -1;  // -1 = fallback
        double declared_stretch = 0.0;
    };
    Answer query(const WeightedGraph& g, Vertex x, Vertex y) const;
    double stretch_for_rank(int rank) const;
    size_t size_words() const;
};

int64_t prefix_size(PrefixPreset preset, int n, int i);  // pow2: floor(n^(1-1/2^i)); harmonic: floor(n^(1-1/i))
int default_prefix_count(PrefixPreset preset, int n);

PrioritizedOracle prioritized_spanner(const WeightedGraph& g, const std::vector<Vertex>& ranking,
                                      PrefixPreset preset, int T, uint64_t seed);

}  // namespace spanlab
