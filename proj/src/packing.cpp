#include "p2f/packing.hpp"

#include <algorithm>
#include <map>

#include "p2f/errors.hpp"

namespace p2f {
namespace {

std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

OrientedCyclePacking OrientedCyclePacking::empty(const Graph& g) {
    OrientedCyclePacking p;
    p.successor.assign(g.vertex_count(), -1);
    p.predecessor.assign(g.vertex_count(), -1);
    p.covered = VertexSet(g.vertex_count());
    return p;
}

OrientedCyclePacking OrientedCyclePacking::from_cycles(const Graph& g, std::vector<std::vector<int>> cycles) {
    OrientedCyclePacking p = empty(g);
    for (auto& c : cycles) p.append_cycle(g, c);
    p.audit(g);
    return p;
}

void OrientedCyclePacking::append_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw InternalError("append_cycle: cycle shorter than 3");
    for (size_t i = 0; i < cycle.size(); ++i) {
        int v = cycle[i];
        int next = cycle[(i + 1) % cycle.size()];
        if (v < 0 || v >= g.vertex_count()) throw InternalError("append_cycle: vertex out of range");
        if (covered.test(v)) throw InternalError("append_cycle: vertex already covered");
        if (!g.has_edge(v, next)) throw InternalError("append_cycle: missing edge");
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        int v = cycle[i];
        successor[v] = cycle[(i + 1) % cycle.size()];
        predecessor[cycle[(i + 1) % cycle.size()]] = v;
        covered.set(v);
    }
    cycles.push_back(cycle);
}

OrientedCyclePacking OrientedCyclePacking::from_edge_set(const Graph& g, const std::set<std::pair<int, int>>& edges) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2)
            throw InternalError("from_edge_set: vertex " + std::to_string(v) + " has degree " + std::to_string(nb.size()));
        std::sort(nb.begin(), nb.end());
    }

    OrientedCyclePacking p = empty(g);
    std::set<int> todo;
    for (auto& [v, nb] : adj) todo.insert(v);
    while (!todo.empty()) {
        int start = *todo.begin();
        std::vector<int> cycle{start};
        int prev = start;
        int cur = adj[start][0];  // orient toward the smaller neighbor
        while (cur != start) {
            cycle.push_back(cur);
            const auto& nb = adj[cur];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        for (int v : cycle) todo.erase(v);
        p.append_cycle(g, cycle);
    }
    p.audit(g);
    return p;
}

std::set<std::pair<int, int>> OrientedCyclePacking::edge_set() const {
    std::set<std::pair<int, int>> out;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) out.insert(norm(c[i], c[(i + 1) % c.size()]));
    return out;
}

void OrientedCyclePacking::audit(const Graph& g) const {
    const int n = g.vertex_count();
    if (int(successor.size()) != n || int(predecessor.size()) != n)
        throw InternalError("packing audit: map size mismatch");

    VertexSet seen(n);
    int total = 0;
    for (const auto& c : cycles) {
        if (c.size() < 3) throw InternalError("packing audit: cycle shorter than 3");
        for (size_t i = 0; i < c.size(); ++i) {
            int v = c[i];
            int next = c[(i + 1) % c.size()];
            if (v < 0 || v >= n) throw InternalError("packing audit: vertex out of range");
            if (seen.test(v)) throw InternalError("packing audit: cycles are not disjoint");
            seen.set(v);
            ++total;
            if (!g.has_edge(v, next)) throw InternalError("packing audit: edge not in graph");
            if (successor[v] != next) throw InternalError("packing audit: successor map inconsistent");
            if (predecessor[next] != v) throw InternalError("packing audit: predecessor map inconsistent");
        }
    }
    if (!(seen == covered)) throw InternalError("packing audit: covered set inconsistent");
    if (total != covered.count()) throw InternalError("packing audit: covered count inconsistent");
    for (int v = 0; v < n; ++v) {
        if (!covered.test(v) && (successor[v] != -1 || predecessor[v] != -1))
            throw InternalError("packing audit: stale map entry for uncovered vertex");
    }
}

}  // namespace p2f
