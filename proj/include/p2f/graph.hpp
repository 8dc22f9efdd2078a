#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace p2f {

/// Subset of the vertices 0..n-1 of a fixed universe, bitset-backed.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }
    /// Smallest member, or -1 if empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool contains(const VertexSet& other) const {  // superset test
        for (size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet operator&(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet minus(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    /// Visit members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t bits = words_[i];
            while (bits) {
                f(int(i * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    template <typename Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// adjacency lists. Duplicate input edges are deduplicated; self-loops
/// are rejected.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    /// All edges as pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph() = default;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// N_G(S): vertices outside s with at least one neighbor in s.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s);

/// Minimum whole-graph degree over the members of s (s must be nonempty).
int min_degree_of_set(const Graph& g, const VertexSet& s);

/// True iff no edge of g has both endpoints in s. The empty set counts
/// as independent.
bool is_independent(const Graph& g, const VertexSet& s);

/// Connected components of the subgraph induced by `within`, ordered by
/// smallest contained vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

/// True iff the subgraph induced by `within` is acyclic.
bool is_forest(const Graph& g, const VertexSet& within);

// Edge-list text format: comment lines start with '#', the first data
// line is "n m", followed by m lines "u v". The writer emits u < v,
// sorted, with no comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace p2f
