#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "p2f/deficiency.hpp"
#include "p2f/errors.hpp"
#include "p2f/generators.hpp"

using namespace p2f;

TEST_CASE("fixed small graphs") {
    CHECK(compute_deficiency(gen_cycle(5)).deficiency == 1);       // best pair {0,2}: 2-2+1
    CHECK(compute_deficiency(gen_complete(2)).deficiency == 1);    // single vertex: 1-1+1
    CHECK(compute_deficiency(gen_path(3)).deficiency == 2);        // both leaves: 2-1+1
    CHECK(compute_deficiency(gen_complete(4)).deficiency == -1);   // 1-3+1
    CHECK(compute_deficiency(Graph::from_edge_list(1, {})).deficiency == 2);  // 1-0+1
}

TEST_CASE("two-apex family reproduces the 2 vs k+1 gap for k >= 2") {
    for (int k = 2; k <= 5; ++k) {
        DeficiencyReport report = compute_deficiency(gen_g2(k, 2 * k));
        CHECK(report.deficiency == 2);
        CHECK(report.alpha == 2 * k);
        CHECK(report.min_degree == k);
        CHECK(report.classical_bound == k + 1);
    }
}

TEST_CASE("classical bound on fixed graphs") {
    CHECK(classical_bound(gen_g2(3, 6)) == 4);
    CHECK(classical_bound(gen_complete(4)) == -1);
    CHECK(classical_bound(gen_cycle(5)) == 1);
}

TEST_CASE("agreement with the naive subset scan") {
    for (uint64_t seed = 0; seed < 250; ++seed) {
        int n = 1 + int(seed % 11);
        Graph g = gen_random(n, 1 + int(seed % 4), 5, seed);
        DeficiencyReport report = compute_deficiency(g);
        CHECK(report.deficiency == testing_oracles::brute_deficiency(g));
        CHECK(report.alpha == testing_oracles::brute_alpha(g));
        CHECK(report.deficiency <= report.classical_bound);
        CHECK(verify_certificate(g, report.certificate));
        CHECK(report.certificate.value == report.deficiency);
    }
}

TEST_CASE("certificate verification") {
    Graph c5 = gen_cycle(5);
    CHECK(verify_certificate(c5, {VertexSet::of(5, {0, 2}), 1}));
    CHECK_FALSE(verify_certificate(c5, {VertexSet::of(5, {0, 2}), 2}));  // value off by one
    CHECK_FALSE(verify_certificate(c5, {VertexSet(5), 0}));              // empty witness

    Graph k3 = gen_complete(3);
    CHECK_FALSE(verify_certificate(k3, {VertexSet::of(3, {0, 1}), 0}));  // not independent

    Graph g2 = gen_g2(2, 4);
    // first apex + second block
    CHECK(verify_certificate(g2, {VertexSet::of(g2.vertex_count(), {0, 4, 5}), 2}));
}

TEST_CASE("two-factor degree condition is exactly nonpositive deficiency") {
    CHECK(satisfies_two_factor_condition(gen_complete(4)));
    CHECK_FALSE(satisfies_two_factor_condition(gen_complete(2)));
    CHECK_FALSE(satisfies_two_factor_condition(gen_cycle(5)));
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random(8, 3, 5, seed);
        CHECK(satisfies_two_factor_condition(g) == (testing_oracles::brute_deficiency(g) <= 0));
    }
}

TEST_CASE("budget is enforced") {
    Graph big = gen_random(12, 1, 2, 1);
    CHECK_THROWS_AS(compute_deficiency(big, SearchBudget{10}), BudgetError);
    CHECK_THROWS_AS(compute_deficiency(Graph::from_edge_list(0, {})), std::invalid_argument);
}

TEST_CASE("deterministic witness") {
    Graph g = gen_random(10, 2, 5, 99);
    auto a = compute_deficiency(g);
    auto b = compute_deficiency(g);
    CHECK(a.certificate.witness == b.certificate.witness);
}
