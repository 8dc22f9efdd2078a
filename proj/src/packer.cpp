#include "p2f/packer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "p2f/errors.hpp"
#include "p2f/forest.hpp"

namespace p2f {
namespace {

std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

void emit(const TraceSink* sink, const std::string& line) {
    if (sink && *sink) (*sink)(line);
}

std::string json_ints(const std::vector<int>& vs) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << ']';
    return out.str();
}

int induced_degree(const Graph& g, const VertexSet& within, int v) {
    int d = 0;
    for (int u : g.neighbors(v))
        if (within.test(u)) ++d;
    return d;
}

// BFS path between two vertices inside the induced subgraph on `within`
// (unique when the subgraph is a forest).
std::vector<int> path_in_forest(const Graph& g, const VertexSet& within, int from, int to) {
    if (from == to) return {from};
    std::vector<int> parent(g.vertex_count(), -1);
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (within.test(u) && parent[u] == -1) {
                parent[u] = v;
                if (u == to) {
                    std::vector<int> path{to};
                    while (path.back() != from) path.push_back(parent[path.back()]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(u);
            }
        }
    }
    throw InternalError("path_in_forest: endpoints not connected");
}

// Shortest cycle inside the induced subgraph on `within`, found by
// removing each induced edge in turn and taking the shortest remaining
// path between its endpoints. Ties resolve toward the smallest edge.
std::optional<std::vector<int>> shortest_cycle(const Graph& g, const VertexSet& within) {
    const int n = g.vertex_count();
    std::optional<std::vector<int>> best;
    std::vector<int> dist(n), parent(n);
    within.for_each([&](int a) {
        for (int b : g.neighbors(a)) {
            if (b <= a || !within.test(b)) continue;
            // BFS a -> b avoiding the edge (a, b).
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int> queue{a};
            dist[a] = 0;
            parent[a] = -1;
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                if (v == b) break;
                if (best && dist[v] + 2 >= int(best->size())) continue;
                for (int u : g.neighbors(v)) {
                    if (!within.test(u) || dist[u] != -1) continue;
                    if (v == a && u == b) continue;
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
            if (dist[b] == -1) continue;
            int len = dist[b] + 1;
            if (!best || len < int(best->size())) {
                std::vector<int> cycle{b};
                while (cycle.back() != a) cycle.push_back(parent[cycle.back()]);
                std::reverse(cycle.begin(), cycle.end());  // a ... b, closed by (b, a)
                best = std::move(cycle);
            }
        }
    });
    return best;
}

int smallest_leaf(const Graph& g, const VertexSet& component, int exclude) {
    int found = -1;
    component.for_each([&](int v) {
        if (found != -1 || v == exclude) return;
        if (induced_degree(g, component, v) <= 1) found = v;
    });
    if (found == -1) throw InternalError("component has no spare leaf");
    return found;
}

DeficiencyCertificate make_failure_certificate(const Graph& g, const VertexSet& h, const VertexSet& base_set,
                                               const std::vector<int>& covered_neighbors,
                                               const OrientedCyclePacking& f) {
    // base_set is a maximum independent set of the forest on h. The
    // successors of x's covered neighbors are independent (insertion
    // already failed); those with no neighbor back in h extend it.
    VertexSet outside = neighborhood_of_set(g, h);
    VertexSet witness = base_set;
    for (int y : covered_neighbors) {
        int s = f.successor[y];
        if (!outside.test(s)) witness.set(s);
    }
    DeficiencyCertificate cert{witness, certificate_value(g, witness)};
    if (!verify_certificate(g, cert)) throw InternalError("failure certificate does not verify");
    if (cert.value < base_set.count()) throw InternalError("failure certificate below forest independence number");
    return cert;
}

std::vector<int> covered_neighbors_of(const Graph& g, const OrientedCyclePacking& f, int x) {
    std::vector<int> out;
    for (int u : g.neighbors(x))
        if (f.covered.test(u)) out.push_back(u);
    return out;
}

bool successor_reaches(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h, int y) {
    for (int u : g.neighbors(f.successor[y]))
        if (h.test(u)) return true;
    return false;
}

}  // namespace

std::optional<OrientedCyclePacking> try_insert_uncovered(const Graph& g, const OrientedCyclePacking& f, int x) {
    if (f.covered.test(x)) throw std::invalid_argument("try_insert_uncovered: x already covered");
    auto nb = covered_neighbors_of(g, f, x);
    for (size_t i = 0; i < nb.size(); ++i) {
        for (size_t j = i + 1; j < nb.size(); ++j) {
            int y1 = nb[i], y2 = nb[j];
            if (!g.has_edge(f.successor[y1], f.successor[y2])) continue;
            auto edges = f.edge_set();
            edges.erase(norm(y1, f.successor[y1]));
            edges.erase(norm(y2, f.successor[y2]));
            edges.insert(norm(y1, x));
            edges.insert(norm(y2, x));
            edges.insert(norm(f.successor[y1], f.successor[y2]));
            auto rebuilt = OrientedCyclePacking::from_edge_set(g, edges);
            if (rebuilt.covered_count() != f.covered_count() + 1)
                throw InternalError("try_insert_uncovered: unexpected cover size");
            return rebuilt;
        }
    }
    return std::nullopt;
}

AnchorResult find_anchor_for_isolated(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h, int x,
                                      std::optional<int> avoid) {
    if (!h.test(x) || induced_degree(g, h, x) != 0)
        throw std::invalid_argument("find_anchor_for_isolated: x is not an isolated vertex of h");
    auto nb = covered_neighbors_of(g, f, x);
    for (int y : nb) {
        if (avoid && y == *avoid) continue;
        if (successor_reaches(g, f, h, y)) return y;
    }
    // Fewer than two qualifying anchors exist, so at most one successor
    // reaches back into h; the remaining successors certify.
    VertexSet base = forest_max_independent_set(g, h);
    if (!base.test(x)) throw InternalError("find_anchor_for_isolated: isolated x missing from maximum set");
    return make_failure_certificate(g, h, base, nb, f);
}

AnchorResult find_anchor_for_leaf(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h, int x) {
    if (!h.test(x) || induced_degree(g, h, x) != 1)
        throw std::invalid_argument("find_anchor_for_leaf: x is not a degree-1 vertex of h");
    auto nb = covered_neighbors_of(g, f, x);
    for (int y : nb)
        if (successor_reaches(g, f, h, y)) return y;
    VertexSet base = forest_max_independent_set_containing(g, h, x);
    return make_failure_certificate(g, h, base, nb, f);
}

ChainOutcome build_augmenting_chain(const Graph& g, const OrientedCyclePacking& f, const VertexSet& h,
                                    const TraceSink* sink) {
    if (h.empty()) throw std::invalid_argument("build_augmenting_chain: h is empty");
    if (h.intersects(f.covered)) throw std::invalid_argument("build_augmenting_chain: h overlaps the packing");
    if (!is_forest(g, h)) throw std::invalid_argument("build_augmenting_chain: h is not a forest");

    auto components = connected_components(g, h);
    std::vector<ChainStep> steps;

    VertexSet current = components[0];
    int x = smallest_leaf(g, current, -1);
    std::optional<int> avoid;

    while (true) {
        if (auto inserted = try_insert_uncovered(g, f, x)) {
            emit(sink, "{\"event\":\"insert\",\"vertex\":" + std::to_string(x) +
                           ",\"cover\":" + std::to_string(inserted->covered_count()) + "}");
            return *inserted;
        }

        bool isolated = current.count() == 1;
        AnchorResult found = isolated ? find_anchor_for_isolated(g, f, h, x, avoid)
                                      : find_anchor_for_leaf(g, f, h, x);
        if (auto* cert = std::get_if<DeficiencyCertificate>(&found)) {
            emit(sink, "{\"event\":\"certificate\",\"value\":" + std::to_string(cert->value) +
                           ",\"witness\":" + json_ints(cert->witness.to_vector()) + "}");
            return *cert;
        }
        int anchor = std::get<int>(found);
        int after = f.successor[anchor];

        // Probe selection: prefer a neighbor of successor(anchor) inside
        // an already-visited component, latest-visited first; otherwise
        // continue into a fresh component via the smallest neighbor.
        int hit_index = -1, probe = -1;
        for (int i = int(steps.size()); i >= 0 && hit_index == -1; --i) {
            const VertexSet& comp = (i == int(steps.size())) ? current : steps[i].component;
            for (int u : g.neighbors(after)) {
                if (comp.test(u)) {
                    hit_index = i;
                    probe = (probe == -1 || u < probe) ? u : probe;
                }
            }
        }
        if (hit_index == -1) {
            for (int u : g.neighbors(after)) {
                if (h.test(u) && (probe == -1 || u < probe)) probe = u;
            }
        }
        if (probe == -1) throw InternalError("build_augmenting_chain: anchor successor reaches nothing");

        steps.push_back({current, x, anchor, probe});
        emit(sink, "{\"event\":\"chain_step\",\"index\":" + std::to_string(steps.size() - 1) +
                       ",\"leaf\":" + std::to_string(x) + ",\"anchor\":" + std::to_string(anchor) +
                       ",\"probe\":" + std::to_string(probe) + "}");

        if (hit_index != -1) {
            // Drop the prefix before the hit component; the retained
            // suffix is a valid chain whose final probe lands in its
            // first component, and successor(last anchor) reaches no
            // later retained component.
            steps.erase(steps.begin(), steps.begin() + hit_index);
            AugmentingChain chain{std::move(steps), false};
            chain.closed = f.successor[chain.steps.back().anchor] == chain.steps.front().anchor;
            emit(sink, std::string("{\"event\":\"chain\",\"kind\":\"") + (chain.closed ? "closed" : "open") +
                           "\",\"steps\":" + std::to_string(chain.steps.size()) +
                           ",\"dropped\":" + std::to_string(hit_index) + "}");
            return chain;
        }

        // Continue into the fresh component containing the probe.
        current = VertexSet(g.vertex_count());
        for (const auto& comp : components) {
            if (comp.test(probe)) {
                current = comp;
                break;
            }
        }
        for (const auto& step : steps)
            if (step.component.test(probe)) throw InternalError("build_augmenting_chain: revisited a component");
        if (current.count() == 1) {
            x = probe;
            avoid = after;
        } else {
            x = smallest_leaf(g, current, probe);
            avoid.reset();
        }
    }
}

namespace {

// Shared edge surgery for both rewires: remove the arc after every
// anchor, then add the connecting walks. Walk i runs from
// successor(anchor_{i-1}) through probe_{i-1}, along the tree path to
// leaf_i, and ends at anchor_i. The open rewire also adds the wrap
// walk from successor(anchor_r) through probe_r back to leaf_0/anchor_0.
std::set<std::pair<int, int>> rewired_edges(const Graph& g, const OrientedCyclePacking& f,
                                            const AugmentingChain& chain, bool with_wrap_walk) {
    auto edges = f.edge_set();
    for (const auto& step : chain.steps) edges.erase(norm(step.anchor, f.successor[step.anchor]));

    auto add_walk = [&](int entry_successor, int probe, const VertexSet& component, int leaf, int anchor) {
        edges.insert(norm(entry_successor, probe));
        auto path = path_in_forest(g, component, probe, leaf);
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.insert(norm(path[i], path[i + 1]));
        edges.insert(norm(leaf, anchor));
    };

    for (size_t i = 1; i < chain.steps.size(); ++i) {
        const ChainStep& prev = chain.steps[i - 1];
        const ChainStep& step = chain.steps[i];
        add_walk(f.successor[prev.anchor], prev.probe, step.component, step.leaf, step.anchor);
    }
    if (with_wrap_walk) {
        const ChainStep& last = chain.steps.back();
        const ChainStep& head = chain.steps.front();
        add_walk(f.successor[last.anchor], last.probe, head.component, head.leaf, head.anchor);
    }
    return edges;
}

}  // namespace

OrientedCyclePacking rewire_closed_chain(const Graph& g, const OrientedCyclePacking& f, const AugmentingChain& chain) {
    if (!chain.closed || chain.steps.empty())
        throw std::invalid_argument("rewire_closed_chain: chain is not closed");
    auto edges = rewired_edges(g, f, chain, /*with_wrap_walk=*/false);
    int retired = chain.steps.front().anchor;
    for (auto [u, v] : edges)
        if (u == retired || v == retired) throw InternalError("rewire_closed_chain: retired anchor still incident");
    auto rebuilt = OrientedCyclePacking::from_edge_set(g, edges);
    rebuilt.audit(g);
    return rebuilt;
}

OrientedCyclePacking rewire_open_chain(const Graph& g, const OrientedCyclePacking& f, const AugmentingChain& chain) {
    if (chain.closed || chain.steps.empty())
        throw std::invalid_argument("rewire_open_chain: chain is not open");
    auto edges = rewired_edges(g, f, chain, /*with_wrap_walk=*/true);
    auto rebuilt = OrientedCyclePacking::from_edge_set(g, edges);
    rebuilt.audit(g);
    if (rebuilt.covered_count() < f.covered_count() + int(chain.steps.size()) - 1)
        throw InternalError("rewire_open_chain: cover did not grow as required");
    return rebuilt;
}

OrientedCyclePacking initial_packing(const Graph& g) {
    OrientedCyclePacking f = OrientedCyclePacking::empty(g);
    VertexSet remaining = VertexSet::full(g.vertex_count());
    while (auto cycle = shortest_cycle(g, remaining)) {
        f.append_cycle(g, *cycle);
        for (int v : *cycle) remaining.reset(v);
    }
    f.audit(g);
    return f;
}

PackOutcome pack_to_optimum(const Graph& g, const TraceSink* sink) {
    const int n = g.vertex_count();
    OrientedCyclePacking f = OrientedCyclePacking::empty(g);
    PackStats stats;

    auto uncovered = [&] { return VertexSet::full(n).minus(f.covered); };
    auto isolated_count = [&](const VertexSet& h) {
        int count = 0;
        h.for_each([&](int v) {
            if (induced_degree(g, h, v) == 0) ++count;
        });
        return count;
    };
    auto potential = [&] {
        VertexSet h = uncovered();
        return std::pair<int, int>(h.count(), isolated_count(h));
    };
    auto guard = [&, last = std::pair<int, int>(n + 1, 0)]() mutable {
        auto now = potential();
        if (now >= last) throw InternalError("pack_to_optimum: potential did not decrease");
        last = now;
    };

    const int64_t move_cap = int64_t(n + 1) * (n + 1) + 1;
    int64_t moves = 0;
    auto count_move = [&] {
        if (++moves > move_cap) throw InternalError("pack_to_optimum: move cap exceeded");
        guard();
    };

    while (true) {
        ++stats.rounds;
        while (auto cycle = shortest_cycle(g, uncovered())) {
            f.append_cycle(g, *cycle);
            ++stats.absorbed_cycles;
            count_move();
            emit(sink, "{\"event\":\"absorb\",\"cycle\":" + json_ints(*cycle) + "}");
        }
        VertexSet h = uncovered();
        if (h.empty()) return {std::move(f), std::nullopt, stats};

        ChainOutcome out = build_augmenting_chain(g, f, h, sink);
        if (auto* cert = std::get_if<DeficiencyCertificate>(&out)) {
            return {std::move(f), *cert, stats};
        }
        if (auto* inserted = std::get_if<OrientedCyclePacking>(&out)) {
            f = std::move(*inserted);
            ++stats.insertions;
            count_move();
            continue;
        }
        const auto& chain = std::get<AugmentingChain>(out);
        auto before = potential();
        f = chain.closed ? rewire_closed_chain(g, f, chain) : rewire_open_chain(g, f, chain);
        (chain.closed ? stats.closed_rewires : stats.open_rewires)++;
        count_move();
        auto after = potential();
        emit(sink, std::string("{\"event\":\"rewire\",\"kind\":\"") + (chain.closed ? "closed" : "open") +
                       "\",\"steps\":" + std::to_string(chain.steps.size()) +
                       ",\"uncovered_before\":" + std::to_string(before.first) +
                       ",\"uncovered_after\":" + std::to_string(after.first) +
                       ",\"isolated_before\":" + std::to_string(before.second) +
                       ",\"isolated_after\":" + std::to_string(after.second) + "}");
    }
}

}  // namespace p2f
