#include "p2f/forest.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "p2f/errors.hpp"

namespace p2f {
namespace {

void require_forest(const Graph& g, const VertexSet& within, const char* who) {
    if (!is_forest(g, within))
        throw std::invalid_argument(std::string(who) + ": induced subgraph contains a cycle");
}

// Rooted include/exclude DP over one tree component. Vertices are
// processed in reverse DFS-finish order so children are ready before
// their parent.
struct TreeDp {
    std::vector<int> order;    // DFS preorder from the root
    std::vector<int> parent;   // indexed by vertex, -1 for the root
    std::vector<int> inc, exc;

    TreeDp(const Graph& g, const VertexSet& within, int root) {
        const int n = g.vertex_count();
        parent.assign(n, -1);
        inc.assign(n, 0);
        exc.assign(n, 0);
        std::vector<int> stack{root};
        std::vector<char> seen(n, 0);
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int u : g.neighbors(v)) {
                if (within.test(u) && !seen[u]) {
                    seen[u] = 1;
                    parent[u] = v;
                    stack.push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            inc[v] = 1;
            for (int u : g.neighbors(v)) {
                if (within.test(u) && parent[u] == v) {
                    inc[v] += exc[u];
                    exc[v] += std::max(inc[u], exc[u]);
                }
            }
        }
    }

    int alpha(int root) const { return std::max(inc[root], exc[root]); }

    // Reconstruct one maximum set; prefer_include controls the tie at
    // the root (inc == exc).
    void collect(const Graph& g, const VertexSet& within, int root, bool prefer_include, VertexSet& out) const {
        std::vector<std::pair<int, bool>> stack;  // (vertex, may_include)
        bool take_root = prefer_include ? inc[root] >= exc[root] : inc[root] > exc[root];
        stack.emplace_back(root, take_root);
        while (!stack.empty()) {
            auto [v, take] = stack.back();
            stack.pop_back();
            if (take) out.set(v);
            for (int u : g.neighbors(v)) {
                if (within.test(u) && parent[u] == v) {
                    bool take_u = take ? false : inc[u] >= exc[u];
                    stack.emplace_back(u, take_u);
                }
            }
        }
    }
};

}  // namespace

int forest_alpha(const Graph& g, const VertexSet& within) {
    require_forest(g, within, "forest_alpha");
    int total = 0;
    for (const auto& comp : connected_components(g, within)) {
        int root = comp.first();
        TreeDp dp(g, comp, root);
        total += dp.alpha(root);
    }
    return total;
}

VertexSet forest_max_independent_set(const Graph& g, const VertexSet& within) {
    require_forest(g, within, "forest_max_independent_set");
    VertexSet out(g.vertex_count());
    for (const auto& comp : connected_components(g, within)) {
        int root = comp.first();
        TreeDp dp(g, comp, root);
        dp.collect(g, comp, root, true, out);
    }
    return out;
}

VertexSet forest_max_independent_set_containing(const Graph& g, const VertexSet& within, int u) {
    require_forest(g, within, "forest_max_independent_set_containing");
    if (!within.test(u)) throw std::invalid_argument("forest_max_independent_set_containing: u not in set");
    int deg = 0;
    for (int w : g.neighbors(u))
        if (within.test(w)) ++deg;
    if (deg > 1)
        throw std::invalid_argument("forest_max_independent_set_containing: u has induced degree >= 2");

    VertexSet out(g.vertex_count());
    for (const auto& comp : connected_components(g, within)) {
        if (comp.test(u)) {
            // Root the component at u; including a degree-<=1 root never
            // loses optimality, so inc[u] >= exc[u] and the tie-break
            // puts u in the set.
            TreeDp dp(g, comp, u);
            dp.collect(g, comp, u, true, out);
        } else {
            int root = comp.first();
            TreeDp dp(g, comp, root);
            dp.collect(g, comp, root, true, out);
        }
    }
    if (!out.test(u)) throw InternalError("forest_max_independent_set_containing: u not selected");
    return out;
}

std::vector<std::pair<int, int>> forest_max_matching(const Graph& g, const VertexSet& within) {
    require_forest(g, within, "forest_max_matching");
    const int n = g.vertex_count();
    std::vector<int> deg(n, 0);
    within.for_each([&](int v) {
        for (int u : g.neighbors(v))
            if (within.test(u)) ++deg[v];
    });

    VertexSet alive = within;
    std::set<int> leaves;
    within.for_each([&](int v) {
        if (deg[v] == 1) leaves.insert(v);
    });

    std::vector<std::pair<int, int>> matching;
    auto drop = [&](int v) {
        alive.reset(v);
        leaves.erase(v);
        for (int u : g.neighbors(v)) {
            if (alive.test(u)) {
                if (--deg[u] == 1) leaves.insert(u);
                else if (deg[u] == 0) leaves.erase(u);
            }
        }
    };

    while (!leaves.empty()) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        if (!alive.test(v) || deg[v] != 1) continue;
        int mate = -1;
        for (int u : g.neighbors(v)) {
            if (alive.test(u)) {
                mate = u;
                break;
            }
        }
        matching.emplace_back(std::min(v, mate), std::max(v, mate));
        drop(v);
        drop(mate);
    }
    std::sort(matching.begin(), matching.end());
    return matching;
}

ForestFactor forest_pseudo_factor(const Graph& g, const VertexSet& within) {
    ForestFactor f;
    f.matched_edges = forest_max_matching(g, within);
    f.singletons = within;
    for (auto [u, v] : f.matched_edges) {
        f.singletons.reset(u);
        f.singletons.reset(v);
    }
    return f;
}

}  // namespace p2f
