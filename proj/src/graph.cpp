#include "p2f/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "p2f/errors.hpp"

namespace p2f {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += int(nb.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](int v) {
        for (int u : g.neighbors(v))
            if (!s.test(u)) out.set(u);
    });
    return out;
}

int min_degree_of_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("min_degree_of_set: empty set");
    int best = g.vertex_count();
    s.for_each([&](int v) { best = std::min(best, g.degree(v)); });
    return best;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        for (int u : g.neighbors(v)) {
            if (s.test(u)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (!within.test(s) || seen[s]) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int u : g.neighbors(v)) {
                if (within.test(u) && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_forest(const Graph& g, const VertexSet& within) {
    // Acyclic iff induced edge count == vertex count - component count.
    int edges = 0;
    within.for_each([&](int v) {
        for (int u : g.neighbors(v))
            if (u > v && within.test(u)) ++edges;
    });
    int comps = int(connected_components(g, within).size());
    return edges == within.count() - comps;
}

Graph read_edge_list(std::istream& in) {
    auto next_data_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_data_line(line)) throw InputError("edge list: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw InputError("edge list: bad header, expected 'n m'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw InputError("edge list: bad edge line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge list: endpoint out of range on line: " + line);
        edges.emplace_back(int(u), int(v));
    }
    return Graph::from_edge_list(int(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace p2f
