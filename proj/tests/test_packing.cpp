#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p2f/errors.hpp"
#include "p2f/generators.hpp"
#include "p2f/packing.hpp"

using namespace p2f;

TEST_CASE("packing from explicit cycles") {
    Graph g = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    auto p = OrientedCyclePacking::from_cycles(g, {{0, 1, 2}, {3, 4, 5, 6}});
    CHECK(p.covered_count() == 7);
    CHECK(p.successor[0] == 1);
    CHECK(p.predecessor[0] == 2);
    CHECK(p.successor[6] == 3);
    CHECK(p.edge_set().size() == 7);
    p.audit(g);
}

TEST_CASE("invalid cycles are rejected") {
    Graph g = gen_path(4);
    CHECK_THROWS_AS(OrientedCyclePacking::from_cycles(g, {{0, 1, 2}}), InternalError);  // (2,0) missing
    Graph c3 = gen_cycle(3);
    CHECK_THROWS_AS(OrientedCyclePacking::from_cycles(c3, {{0, 1}}), InternalError);    // too short
    Graph two = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK_THROWS_AS(OrientedCyclePacking::from_cycles(two, {{0, 1, 2}, {2, 0, 1}}), InternalError);  // overlap
}

TEST_CASE("rebuild from a 2-regular edge set is canonical") {
    Graph g = gen_cycle(6);
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < 6; ++v) edges.insert({std::min(v, (v + 1) % 6), std::max(v, (v + 1) % 6)});
    auto p = OrientedCyclePacking::from_edge_set(g, edges);
    REQUIRE(p.cycles.size() == 1);
    CHECK(p.cycles[0][0] == 0);
    CHECK(p.cycles[0][1] == 1);  // starts at the smallest vertex, toward its smaller neighbor
    CHECK(p.covered_count() == 6);
}

TEST_CASE("rebuild rejects non-2-regular edge sets") {
    Graph g = gen_path(4);
    std::set<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(OrientedCyclePacking::from_edge_set(g, edges), InternalError);
}

TEST_CASE("empty packing") {
    Graph g = gen_path(5);
    auto p = OrientedCyclePacking::empty(g);
    CHECK(p.covered_count() == 0);
    CHECK(p.cycles.empty());
    p.audit(g);
}

TEST_CASE("audit catches corrupted successor maps") {
    Graph g = gen_cycle(4);
    auto p = OrientedCyclePacking::from_cycles(g, {{0, 1, 2, 3}});
    p.successor[0] = 3;
    CHECK_THROWS_AS(p.audit(g), InternalError);
}
