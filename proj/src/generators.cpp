#include "p2f/generators.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "p2f/errors.hpp"

namespace p2f {
namespace {

using Edges = std::vector<std::pair<int, int>>;

}  // namespace

Graph gen_complete(int n) {
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle generator requires n >= 3");
    Edges edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph gen_path(int n) {
    Edges edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph gen_star(int n) {
    if (n < 1) throw InputError("star generator requires n >= 1");
    Edges edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

Graph gen_g1(const Graph& base, int p) {
    if (p < 1) throw InputError("g1 generator requires p >= 1");
    const int b = base.vertex_count();
    Edges edges = base.edges();
    for (int i = 0; i < p; ++i) {
        int u = b + 2 * i, v = b + 2 * i + 1;
        edges.emplace_back(u, v);
        for (int h = 0; h < b; ++h) {
            edges.emplace_back(h, u);
            edges.emplace_back(h, v);
        }
    }
    return Graph::from_edge_list(b + 2 * p, edges);
}

Graph gen_g2(int k, int ell) {
    if (k < 1) throw InputError("g2 generator requires k >= 1");
    if (ell < 2 * k) throw InputError("g2 generator requires l >= 2k");
    const int v1 = 0, v2 = 1;
    const int a1 = 2, a2 = 2 + k, b0 = 2 + 2 * k;
    const int n = 2 + 2 * k + ell;
    Edges edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(v1, a1 + i);
        edges.emplace_back(v2, a2 + i);
        for (int j = 0; j < ell; ++j) {
            edges.emplace_back(a1 + i, b0 + j);
            edges.emplace_back(a2 + i, b0 + j);
        }
    }
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) edges.emplace_back(b0 + i, b0 + j);
    return Graph::from_edge_list(n, edges);
}

Graph gen_fig3() {
    // 22 vertices: spine 0..5 (path), a 7-vertex chain 6..12 hung
    // between the spine ends with one chord, a 9-vertex chain 13..21
    // hung the same way with two chords.
    Edges edges;
    for (int v = 0; v < 5; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, 6);
    for (int v = 6; v < 12; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(12, 5);
    edges.emplace_back(8, 10);
    edges.emplace_back(0, 13);
    for (int v = 13; v < 21; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(21, 5);
    edges.emplace_back(14, 16);
    edges.emplace_back(18, 20);
    return Graph::from_edge_list(22, edges);
}

Graph gen_random(int n, int p_num, int p_den, uint64_t seed) {
    if (n < 0) throw InputError("random generator requires n >= 0");
    if (p_den <= 0 || p_num < 0 || p_num > p_den) throw InputError("random generator requires 0 <= num <= den, den > 0");
    SplitMix64 rng(seed);
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() % uint64_t(p_den) < uint64_t(p_num)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph gen_random_forest(int n, uint64_t seed) {
    if (n < 0) throw InputError("forest generator requires n >= 0");
    SplitMix64 rng(seed);
    Edges edges;
    for (int v = 1; v < n; ++v) {
        if (rng.next() % 4 != 0) {
            int parent = int(rng.next() % uint64_t(v));
            edges.emplace_back(parent, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& args) {
    std::map<std::string, std::string> kv;
    std::istringstream in(args);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("generator spec: expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

long long to_int(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        long long parsed = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw InputError("generator spec: bad integer for '" + key + "': " + value);
    }
}

long long need(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw InputError("generator spec: missing parameter '" + key + "'");
    return to_int(key, it->second);
}

long long get_or(const std::map<std::string, std::string>& kv, const std::string& key, long long fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : to_int(key, it->second);
}

Graph base_from_token(const std::string& token) {
    if (token.size() < 2) throw InputError("generator spec: bad base graph '" + token + "'");
    int size = int(to_int("h", token.substr(1)));
    switch (token[0]) {
        case 'k': return gen_complete(size);
        case 'c': return gen_cycle(size);
        case 'p': return gen_path(size);
        case 's': return gen_star(size);
        default: throw InputError("generator spec: unknown base graph family '" + token + "'");
    }
}

}  // namespace

Graph gen_from_spec(const std::string& spec) {
    std::string family = spec;
    std::string args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        family = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }

    auto single_size = [&](const char* what) {
        if (args.empty()) throw InputError(std::string("generator spec: ") + what + " needs a size, e.g. " + what + ":5");
        if (args.find('=') != std::string::npos) return int(need(parse_kv(args), "n"));
        return int(to_int("n", args));
    };

    if (family == "fig3") {
        if (!args.empty()) throw InputError("generator spec: fig3 takes no parameters");
        return gen_fig3();
    }
    if (family == "cycle") return gen_cycle(single_size("cycle"));
    if (family == "complete") return gen_complete(single_size("complete"));
    if (family == "path") return gen_path(single_size("path"));
    if (family == "star") return gen_star(single_size("star"));
    if (family == "g1") {
        auto kv = parse_kv(args);
        auto it = kv.find("h");
        if (it == kv.end()) throw InputError("generator spec: g1 needs h=<family><size>");
        return gen_g1(base_from_token(it->second), int(need(kv, "p")));
    }
    if (family == "g2") {
        auto kv = parse_kv(args);
        return gen_g2(int(need(kv, "k")), int(need(kv, "l")));
    }
    if (family == "random") {
        auto kv = parse_kv(args);
        return gen_random(int(need(kv, "n")), int(need(kv, "num")), int(need(kv, "den")),
                          uint64_t(get_or(kv, "seed", 0)));
    }
    if (family == "forest") {
        auto kv = parse_kv(args);
        return gen_random_forest(int(need(kv, "n")), uint64_t(get_or(kv, "seed", 0)));
    }
    throw InputError("generator spec: unknown family '" + family + "'");
}

}  // namespace p2f
