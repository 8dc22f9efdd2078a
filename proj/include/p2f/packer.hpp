#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "p2f/deficiency.hpp"
#include "p2f/graph.hpp"
#include "p2f/packing.hpp"

namespace p2f {

/// Receives one JSON line per packer event (absorb / insert / chain_step
/// / rewire / certificate). Used by the CLI --trace flag and by tests.
using TraceSink = std::function<void(const std::string&)>;

/// One step of an augmenting chain through the uncovered forest H:
///  - component: the H-component visited by this step
///  - leaf:   the attaching vertex of the component (induced degree <= 1)
///  - anchor: a covered neighbor of `leaf` whose successor reaches H
///  - probe:  a vertex of H adjacent to successor(anchor); the probe of
///            the last step lands back in the first component
struct ChainStep {
    VertexSet component;
    int leaf = -1;
    int anchor = -1;
    int probe = -1;
};

/// The chain is closed when successor(last anchor) == first anchor; the
/// closed rewire then retires the first anchor, the open rewire extends
/// the packing through every visited component.
struct AugmentingChain {
    std::vector<ChainStep> steps;  // size r+1
    bool closed = false;
};

struct PackStats {
    int64_t absorbed_cycles = 0;
    int64_t insertions = 0;
    int64_t closed_rewires = 0;
    int64_t open_rewires = 0;
    int64_t rounds = 0;
};

struct PackOutcome {
    OrientedCyclePacking packing;
    std::optional<DeficiencyCertificate> certificate;  // absent iff full cover
    PackStats stats;
};

/// Tries to extend the packing over one uncovered vertex x: looks for
/// covered neighbors y1, y2 of x whose successors are adjacent, and
/// reroutes y1 -> x -> y2 while bridging successor(y1)-successor(y2).
/// Returns the rebuilt packing covering V(F) + {x}, or nullopt. When
/// nullopt, the successors of x's covered neighbors form an independent
/// set. x must be uncovered.
std::optional<OrientedCyclePacking> try_insert_uncovered(const Graph& g, const OrientedCyclePacking& f, int x);

/// Either a usable anchor vertex or a deficiency certificate extracted
/// from the failure. Certificates always verify and have value >= the
/// independence number of the forest on h at call time.
using AnchorResult = std::variant<int, DeficiencyCertificate>;

/// Anchor search for a vertex x isolated in the forest on h. An anchor
/// y != avoid qualifies when successor(y) has a neighbor in h. Requires
/// that try_insert_uncovered(x) already failed.
AnchorResult find_anchor_for_isolated(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h, int x,
                                      std::optional<int> avoid);

/// Same for a vertex x of induced degree exactly 1 in h; no avoid
/// filter applies.
AnchorResult find_anchor_for_leaf(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h, int x);

/// Outcome of one chain-building pass over the uncovered forest.
using ChainOutcome = std::variant<AugmentingChain, DeficiencyCertificate, OrientedCyclePacking>;

/// Walks the uncovered forest starting from its first component,
/// repeatedly attaching components through anchors until a probe lands
/// in an already-visited component. Returns the relabeled chain (the
/// prefix before the hit component is dropped so the final probe lands
/// in the first retained component), or a certificate when an anchor
/// search fails, or an improved packing when a vertex insertion
/// succeeds first. h must be a nonempty forest disjoint from f.covered.
ChainOutcome build_augmenting_chain(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h,
                                    const TraceSink* sink = nullptr);

/// Rewire for a closed chain: removes the arcs (anchor_i, successor)
/// for every step, adds the connecting walks through the visited
/// components, and retires the first anchor (it ends up isolated in the
/// new subgraph). The result covers strictly more vertices unless the
/// chain has exactly two steps whose second component is a single
/// vertex, in which case the cover size stays equal and the number of
/// isolated uncovered vertices strictly drops.
OrientedCyclePacking rewire_closed_chain(const Graph& g, const OrientedCyclePacking& f, const AugmentingChain& chain);

/// Rewire for an open chain: removes the same arcs and adds all walks
/// including the wrap-around walk through the first component; the
/// cover always grows.
OrientedCyclePacking rewire_open_chain(const Graph& g, const OrientedCyclePacking& f, const AugmentingChain& chain);

/// Greedy initial packing: repeatedly extract a shortest cycle from the
/// remaining graph. Forests yield the empty packing.
OrientedCyclePacking initial_packing(const Graph& g);

/// Local-improvement loop: absorb cycles from the uncovered part, then
/// alternate chain building and rewiring until either the packing spans
/// the graph or a certificate is produced. Every applied move strictly
/// decreases the potential (uncovered count, isolated uncovered count)
/// lexicographically; violations raise InternalError.
PackOutcome pack_to_optimum(const Graph& g, const TraceSink* sink = nullptr);

}  // namespace p2f
