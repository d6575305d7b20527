#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sparsedom/graph.hpp"

// Independent reference implementations used to check the library. These
// deliberately avoid the library's search machinery: distances come from
// Floyd-Warshall, searches are flat subset enumeration.
namespace testref {

using sparsedom::Graph;
using sparsedom::Vertex;
using sparsedom::VertexSet;

constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> all_pairs_floyd(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex u : g.neighbors(v)) d[v][u] = 1;
    }
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
            }
        }
    }
    return d;
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<double>(rng() % 10000) / 10000.0 < p) g.add_edge(u, v);
        }
    }
    return g;
}

// Enumerate subsets of 0..n-1 of the given size in lexicographic order.
template <typename F>
bool for_each_subset(int n, int size, F&& visit) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    if (size > n) return false;
    while (true) {
        if (visit(combo)) return true;
        if (size == 0) return false;
        int i = size - 1;
        while (i >= 0 && combo[i] == n - size + i) --i;
        if (i < 0) return false;
        ++combo[i];
        for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
}

inline bool set_dominates(const std::vector<std::vector<int>>& dist,
                          const std::vector<int>& x, const VertexSet& w, int d) {
    for (Vertex t : w) {
        bool ok = false;
        for (int c : x) {
            if (dist[c][t] <= d) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

inline bool subset_connected(const Graph& g, const std::vector<int>& x) {
    if (x.size() <= 1) return true;
    std::vector<int> stack = {x[0]};
    std::vector<char> seen(g.vertex_count(), 0), inside(g.vertex_count(), 0);
    for (int v : x) inside[v] = 1;
    seen[x[0]] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex v : g.neighbors(u)) {
            if (inside[v] && !seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return reached == x.size();
}

// Minimum size of a distance-d dominating set of w, or nullopt above k_max.
inline std::optional<int> min_domset_size(const Graph& g, const VertexSet& w, int d,
                                          int k_max) {
    auto dist = all_pairs_floyd(g);
    const int n = g.vertex_count();
    for (int size = 0; size <= std::min(k_max, n); ++size) {
        bool found = for_each_subset(n, size, [&](const std::vector<int>& x) {
            return set_dominates(dist, x, w, d);
        });
        if (found) return size;
    }
    return std::nullopt;
}

inline bool exists_connected_domset(const Graph& g, const VertexSet& w, int d, int k) {
    auto dist = all_pairs_floyd(g);
    const int n = g.vertex_count();
    for (int size = 0; size <= std::min(k, n); ++size) {
        bool found = for_each_subset(n, size, [&](const std::vector<int>& x) {
            return subset_connected(g, x) && set_dominates(dist, x, w, d);
        });
        if (found) return true;
    }
    return false;
}

inline bool exists_d_connected_domset(const Graph& g, int d, int k) {
    auto dist = all_pairs_floyd(g);
    const int n = g.vertex_count();
    VertexSet all = VertexSet::full(n);
    for (int size = 0; size <= std::min(k, n); ++size) {
        bool found = for_each_subset(n, size, [&](const std::vector<int>& x) {
            if (!set_dominates(dist, x, all, d)) return false;
            // Connectivity in the distance-d power graph.
            if (x.size() <= 1) return true;
            std::vector<char> seen(x.size(), 0);
            std::vector<int> stack = {0};
            seen[0] = 1;
            std::size_t reached = 0;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                ++reached;
                for (std::size_t j = 0; j < x.size(); ++j) {
                    if (!seen[j] && dist[x[i]][x[j]] <= d) {
                        seen[j] = 1;
                        stack.push_back(static_cast<int>(j));
                    }
                }
            }
            return reached == x.size();
        });
        if (found) return true;
    }
    return false;
}

inline bool exists_efficient_domset(const Graph& g, int k) {
    auto dist = all_pairs_floyd(g);
    const int n = g.vertex_count();
    VertexSet all = VertexSet::full(n);
    if (k > n) return false;
    return for_each_subset(n, k, [&](const std::vector<int>& x) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                if (dist[x[i]][x[j]] < 3) return false;
            }
        }
        return set_dominates(dist, x, all, 1);
    });
}

// Literal Roman search: supports of size <= k, then all 1/2 assignments.
inline bool exists_roman(const Graph& g, int k) {
    const int n = g.vertex_count();
    auto valid = [&](const std::vector<int>& labels) {
        int weight = 0;
        for (int v = 0; v < n; ++v) weight += labels[v];
        if (weight > k) return false;
        for (int v = 0; v < n; ++v) {
            if (labels[v] != 0) continue;
            bool served = false;
            for (Vertex u : g.neighbors(v)) {
                if (labels[u] == 2) {
                    served = true;
                    break;
                }
            }
            if (!served) return false;
        }
        return true;
    };
    for (int size = 0; size <= std::min(k, n); ++size) {
        bool found = for_each_subset(n, size, [&](const std::vector<int>& supp) {
            for (int mask = 0; mask < (1 << size); ++mask) {
                std::vector<int> labels(n, 0);
                for (int i = 0; i < size; ++i) labels[supp[i]] = (mask >> i & 1) ? 2 : 1;
                if (valid(labels)) return true;
            }
            return false;
        });
        if (found) return true;
    }
    return false;
}

// Vertex-disjoint directed paths for up to two terminal pairs.
inline bool disjoint_paths_exist(const Graph& dg,
                                 const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    const int n = dg.vertex_count();
    std::vector<char> used(n, 0);
    // Depth-first over simple paths of pair `idx`, then recurse to the next.
    auto solve = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == pairs.size()) return true;
        auto [s, t] = pairs[idx];
        if (used[s] || used[t]) return false;
        std::vector<Vertex> path;
        auto walk = [&](auto&& self_walk, Vertex v) -> bool {
            if (used[v]) return false;
            used[v] = 1;
            path.push_back(v);
            if (v == t && self(self, idx + 1)) return true;
            if (v != t) {
                for (Vertex u : dg.neighbors(v)) {
                    if (self_walk(self_walk, u)) return true;
                }
            }
            used[v] = 0;
            path.pop_back();
            return false;
        };
        return walk(walk, s);
    };
    return solve(solve, 0);
}

// Canonical encoding of an unlabeled tree (rooted at its centers).
inline std::string tree_signature(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return "()";
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<int> current = layer;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : current) {
            --remaining;
            for (Vertex u : g.neighbors(v)) {
                if (--degree[u] == 1) next.push_back(u);
            }
        }
        current = std::move(next);
    }
    auto encode = [&](auto&& self, Vertex v, Vertex parent) -> std::string {
        std::vector<std::string> parts;
        for (Vertex u : g.neighbors(v)) {
            if (u != parent) parts.push_back(self(self, u, v));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) s += p;
        return s + ")";
    };
    std::string best;
    for (int root : current) {
        std::string enc = encode(encode, root, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

}  // namespace testref
