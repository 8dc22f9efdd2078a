#pragma once

#include <cstdint>
#include <string>

#include "p2f/graph.hpp"

namespace p2f {

/// SplitMix64: the fixed PRNG behind every random generator, so a seed
/// reproduces the same graph on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

Graph gen_complete(int n);
Graph gen_cycle(int n);  // requires n >= 3
Graph gen_path(int n);
Graph gen_star(int n);  // one center, n-1 leaves

/// Complete join of a base graph with p disjoint edge pairs: every pair
/// vertex is adjacent to all of `base` and to its partner; pairs are
/// mutually non-adjacent. Base keeps vertices 0..|V(base)|-1.
Graph gen_g1(const Graph& base, int p);

/// Two apex vertices v1=0, v2=1, two independent blocks of size k
/// (A1 = 2..k+1, A2 = k+2..2k+1), and a clique of size ell >= 2k on the
/// remaining vertices; each block is completely joined to the clique
/// and to its own apex. The deficiency bound beats the classical
/// alpha-delta+1 bound by a growing margin on this family.
Graph gen_g2(int k, int ell);

/// Fixed 22-vertex instance: a 6-vertex spine joined by a 7-vertex and
/// a 9-vertex chain, with three chords. Its maximum 2-regular subgraph
/// covers 19 vertices, yet every pseudo 2-factor with the minimum
/// number of non-cycle components (2) covers only 18 by cycles.
Graph gen_fig3();

/// Edge-probability graph: each pair u < v (ascending order) keeps an
/// edge iff next() % p_den < p_num.
Graph gen_random(int n, int p_num, int p_den, uint64_t seed);

/// Random forest: each vertex v >= 1 attaches to a uniformly chosen
/// earlier vertex with probability 3/4 and starts a new tree otherwise.
Graph gen_random_forest(int n, uint64_t seed);

/// Parse an inline generator spec as accepted by the CLI:
///   fig3 | cycle:5 | complete:4 | path:6 | star:5
///   g1:h=k1,p=2     (h is <letter><size>: k/c/p/s)
///   g2:k=2,l=4
///   random:n=10,num=3,den=10,seed=7
///   forest:n=12,seed=7
Graph gen_from_spec(const std::string& spec);

}  // namespace p2f
