#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "brute_force.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/girth_instance.hpp"

using namespace spanlab;

TEST_CASE("Petersen with k=4, alpha=1: the exact count battery") {
    WeightedGraph g = petersen_graph();
    GirthInstance inst = delta_pairs(g, 4, 1);
    CHECK(inst.p == 2);
    CHECK(inst.delta == 2);
    CHECK(inst.graph.m() == 15);  // n(p+1)/2
    CHECK(inst.pairs.size() == 30);
    CHECK(inst.expected_pairs == 30);
    CHECK(inst.expected_coverage == 4);
    CHECK(inst.coverage_exact);
    for (int64_t c : inst.coverage) CHECK(c == 4);
}

TEST_CASE("alpha >= k leaves delta = 0 and is rejected") {
    WeightedGraph g = petersen_graph();
    CHECK_THROWS_WITH_AS(delta_pairs(g, 4, 4), doctest::Contains("floor"),
                         std::invalid_argument);
}

TEST_CASE("k=2, alpha=1 on Petersen: delta = 1 pairs are the edges") {
    WeightedGraph g = petersen_graph();
    GirthInstance inst = delta_pairs(g, 2, 1);
    CHECK(inst.delta == 1);
    CHECK(inst.pairs.size() == 15);
    for (int64_t c : inst.coverage) CHECK(c == 1);
}

TEST_CASE("girth at most k is rejected") {
    WeightedGraph g = petersen_graph();  // girth 5
    CHECK_THROWS_WITH_AS(delta_pairs(g, 5, 1), doctest::Contains("girth"),
                         std::invalid_argument);
}

TEST_CASE("non-regular input is rejected") {
    WeightedGraph g = load_graph("n 4\n0 1 1\n1 2 1\n2 3 1\n");
    CHECK_THROWS_WITH_AS(delta_pairs(g, 1, 1), doctest::Contains("regular"),
                         std::invalid_argument);
}

TEST_CASE("Heawood and McGee instances verify") {
    GirthInstance hw = delta_pairs(heawood_graph(), 5, 1);
    CHECK(hw.delta == 2);
    CHECK(hw.coverage_exact);
    GirthInstance mg = delta_pairs(mcgee_graph(), 6, 1);
    CHECK(mg.delta == 3);
    CHECK(mg.coverage_exact);
}

TEST_CASE("delta paths are unavoidable within stretch alpha") {
    GirthInstance inst = delta_pairs(petersen_graph(), 4, 1);
    UnavoidabilityReport rep = check_unavoidable(inst);
    CHECK(rep.ok);
    CHECK(rep.checks == 60);  // 30 pairs x 2 edges
}

TEST_CASE("coverage experiment at probability 1 covers everything") {
    GirthInstance inst = delta_pairs(petersen_graph(), 4, 1);
    CoverageReport rep = coverage_experiment(inst, 1.0, 3, 1);
    for (const CoverageTrial& t : rep.per_trial) {
        CHECK(t.sampled_pairs == 30);
        CHECK(t.covered_edges == 15);
        CHECK(t.beta_hat == doctest::Approx(0.5));  // |E| / |P0|
    }
    CHECK(rep.mean_covered_fraction == doctest::Approx(1.0));
}

TEST_CASE("coverage experiment at probability 0 covers nothing") {
    GirthInstance inst = delta_pairs(petersen_graph(), 4, 1);
    CoverageReport rep = coverage_experiment(inst, 0.0, 3, 1);
    CHECK(rep.mean_covered_fraction == doctest::Approx(0.0));
}

TEST_CASE("coverage experiment at the paper probability 1/4") {
    GirthInstance inst = delta_pairs(petersen_graph(), 4, 1);
    CHECK(inst.default_sample_probability() == doctest::Approx(0.25));
    CoverageReport rep = coverage_experiment(inst, 0.25, 200, 7);
    // each edge is covered by exactly 4 pairs, so the exact per-edge
    // coverage probability is 1 - (3/4)^4
    double expect = 1.0 - std::pow(0.75, 4.0);
    CHECK(rep.mean_covered_fraction == doctest::Approx(expect).epsilon(0.08));
    CHECK(rep.coverage_flag_rate >= 0.95);  // 1 - 2/e threshold is easily beaten
}

TEST_CASE("coverage is monotone in the sampling probability") {
    GirthInstance inst = delta_pairs(petersen_graph(), 4, 1);
    double prev = 0.0;
    for (double p : {0.05, 0.25, 0.6, 1.0}) {
        CoverageReport rep = coverage_experiment(inst, p, 50, 13);
        CHECK(rep.mean_covered_fraction >= prev - 0.05);
        prev = rep.mean_covered_fraction;
    }
}

TEST_CASE("random regular generator respects degree and girth floor") {
    auto g = random_regular_graph(24, 3, 4, 5);
    REQUIRE(g.has_value());
    for (Vertex v = 0; v < g->n(); ++v) CHECK(g->neighbors(v).size() == 3);
    CHECK(*girth(*g) > 4);
}
