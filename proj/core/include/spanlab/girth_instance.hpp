#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Distance-delta pairs of a regular graph with girth > k, delta =
// floor(k / (alpha + 1)). Every such pair has a unique shortest path, and
// every edge lies on exactly delta * p^(delta-1) of them.
struct GirthInstance {
    WeightedGraph graph;  // unit weights
    int p = 0;            // degree - 1
    int k = 0;
    int alpha = 0;
    int delta = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;    // u < v
    std::vector<std::vector<Vertex>> paths;          // unique shortest path per pair
    std::vector<int64_t> coverage;                   // per edge id
    int64_t expected_coverage = 0;                   // delta * p^(delta-1)
    int64_t expected_pairs = 0;                      // n (p+1) p^(delta-1) / 2
    bool coverage_exact = false;                     // every edge hits the expected count

    double default_sample_probability() const { return 1.0 / double(expected_coverage); }
};

GirthInstance delta_pairs(const WeightedGraph& g, int k, int alpha);

// For every pair, deleting any edge of its unique path must push the pair's
// distance above alpha * delta (so every alpha-stretch tour contains it).
struct UnavoidabilityReport {
    bool ok = true;
    size_t checks = 0;
    std::string failure;
};
UnavoidabilityReport check_unavoidable(const GirthInstance& inst);

struct CoverageTrial {
    size_t sampled_pairs = 0;
    size_t covered_edges = 0;
    double covered_fraction = 0.0;
    double beta_hat = 0.0;  // covered / sampled
    bool coverage_flag = false;  // covered >= (1 - 2/e) |E|
    bool size_flag = false;      // sampled in [|E|/2delta, 3|E|/2delta]
};

struct CoverageReport {
    double sample_probability = 0.0;
    int trials = 0;
    uint64_t seed = 0;
    std::vector<CoverageTrial> per_trial;
    double mean_covered_fraction = 0.0;
    double median_covered_fraction = 0.0;
    double median_beta_hat = 0.0;
    double coverage_flag_rate = 0.0;
    double size_flag_rate = 0.0;
};

CoverageReport coverage_experiment(const GirthInstance& inst, double sample_probability, int trials,
                                   uint64_t seed);

}  // namespace spanlab
