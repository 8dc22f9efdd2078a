#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "p2f/errors.hpp"
#include "p2f/generators.hpp"
#include "p2f/graph.hpp"

using namespace p2f;

TEST_CASE("triangle, single edge, single vertex") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    Graph k1 = Graph::from_edge_list(1, {});
    CHECK(k1.degree(0) == 0);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("construction rejects bad input, dedups duplicates") {
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);

    Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
}

TEST_CASE("neighborhood of a set") {
    Graph path = gen_path(3);
    CHECK(neighborhood_of_set(path, VertexSet::of(3, {1})) == VertexSet::of(3, {0, 2}));
    CHECK(neighborhood_of_set(path, VertexSet::full(3)).empty());

    // C5 with s = {0, 2}: the remaining three vertices all touch s.
    Graph c5 = gen_cycle(5);
    CHECK(neighborhood_of_set(c5, VertexSet::of(5, {0, 2})) == VertexSet::of(5, {1, 3, 4}));
}

TEST_CASE("minimum degree over a set") {
    Graph c5 = gen_cycle(5);
    CHECK(min_degree_of_set(c5, VertexSet::of(5, {0, 2})) == 2);

    Graph star = gen_star(4);
    CHECK(min_degree_of_set(star, VertexSet::of(4, {1})) == 1);

    // Two-apex family with k=2, l=4, set = second block + first apex:
    // realized at the apex, whose degree is k.
    Graph g2 = gen_g2(2, 4);
    CHECK(min_degree_of_set(g2, VertexSet::of(g2.vertex_count(), {0, 4, 5})) == 2);

    CHECK_THROWS_AS(min_degree_of_set(c5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("independence check") {
    Graph k3 = gen_complete(3);
    CHECK_FALSE(is_independent(k3, VertexSet::of(3, {0, 1})));
    CHECK(is_independent(k3, VertexSet::of(3, {0})));
    CHECK(is_independent(k3, VertexSet(3)));

    Graph c4 = gen_cycle(4);
    CHECK(is_independent(c4, VertexSet::of(4, {0, 2})));
}

TEST_CASE("independence agrees with pair scan on random graphs") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_random(9, 2, 5, seed);
        auto adj = testing_oracles::adj_masks(g);
        SplitMix64 rng(seed * 77 + 1);
        for (int trial = 0; trial < 40; ++trial) {
            uint32_t mask = uint32_t(rng.next()) & 0x1FF;
            VertexSet s(9);
            for (int v = 0; v < 9; ++v)
                if (mask & (1u << v)) s.set(v);
            CHECK(is_independent(g, s) == testing_oracles::mask_independent(adj, mask));
        }
    }
}

TEST_CASE("connected components partition the set, ordered by minimum") {
    Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(two_edges, VertexSet::full(4));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(4, {0, 1}));
    CHECK(comps[1] == VertexSet::of(4, {2, 3}));

    Graph c5 = gen_cycle(5);
    auto parts = connected_components(c5, VertexSet::of(5, {0, 2}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet::of(5, {0}));
    CHECK(parts[1] == VertexSet::of(5, {2}));

    // fig3 minus its 13-cycle (spine + short chain) and the two
    // long-chain triangles: three singletons remain.
    Graph fig3 = gen_fig3();
    VertexSet rest = VertexSet::full(22);
    for (int v : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 19, 20}) rest.reset(v);
    auto leftover = connected_components(fig3, rest);
    REQUIRE(leftover.size() == 3);
    CHECK(leftover[0] == VertexSet::of(22, {13}));
    CHECK(leftover[1] == VertexSet::of(22, {17}));
    CHECK(leftover[2] == VertexSet::of(22, {21}));
}

TEST_CASE("components are disjoint and exhaustive on random graphs") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_random(11, 1, 4, seed);
        VertexSet within(11);
        SplitMix64 rng(seed + 5);
        for (int v = 0; v < 11; ++v)
            if (rng.next() % 3) within.set(v);
        auto comps = connected_components(g, within);
        VertexSet seen(11);
        for (const auto& comp : comps) {
            CHECK_FALSE(comp.intersects(seen));
            seen = seen | comp;
        }
        CHECK(seen == within);
    }
}

TEST_CASE("forest detection") {
    CHECK(is_forest(gen_path(6), VertexSet::full(6)));
    CHECK(is_forest(gen_star(5), VertexSet::full(5)));
    CHECK_FALSE(is_forest(gen_complete(3), VertexSet::full(3)));

    Graph c5 = gen_cycle(5);
    VertexSet minus_one = VertexSet::full(5);
    minus_one.reset(3);
    CHECK(is_forest(c5, minus_one));
    CHECK_FALSE(is_forest(c5, VertexSet::full(5)));
}

TEST_CASE("edge-list text round trip") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_random(10, 1, 3, seed);
        std::istringstream in(to_edge_list(g));
        Graph parsed = read_edge_list(in);
        CHECK(parsed == g);
    }
}

TEST_CASE("edge-list parser accepts comments, rejects junk") {
    std::istringstream ok("# comment\n3 2\n0 1\n# another\n1 2\n");
    Graph g = read_edge_list(ok);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    std::istringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(missing), InputError);
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), InputError);
    std::istringstream out_of_range("2 1\n0 2\n");
    CHECK_THROWS_AS(read_edge_list(out_of_range), InputError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), InputError);
}

TEST_CASE("neighborhood is always disjoint from its set") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_random(10, 1, 2, seed);
        VertexSet s(10);
        SplitMix64 rng(seed);
        for (int v = 0; v < 10; ++v)
            if (rng.next() & 1) s.set(v);
        CHECK_FALSE(neighborhood_of_set(g, s).intersects(s));
    }
}
