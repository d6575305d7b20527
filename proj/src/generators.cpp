#include "sparsedom/generators.hpp"

#include <random>

namespace sparsedom {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: bad dimensions");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return g;
}

Graph make_random_max_deg(int n, int max_deg, int extra_edges, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_max_deg: need at least one vertex");
    if (max_deg < 2) throw std::invalid_argument("random_max_deg: max_deg must be >= 2");
    if (extra_edges < 0) throw std::invalid_argument("random_max_deg: negative extra edges");
    std::mt19937_64 rng(seed);
    Graph g(n);
    // Attachment tree keeps the graph connected within the degree cap.
    for (int v = 1; v < n; ++v) {
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u) {
            if (g.degree(u) < max_deg) eligible.push_back(u);
        }
        int parent = eligible[static_cast<std::size_t>(rng() % eligible.size())];
        g.add_edge(parent, v);
    }
    long accepted = 0;
    for (long attempt = 0; attempt < 50L * (extra_edges + 1) && accepted < extra_edges;
         ++attempt) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= max_deg || g.degree(v) >= max_deg) continue;
        g.add_edge(u, v);
        ++accepted;
    }
    return g;
}

Graph make_subdivided_clique(int n, int t) {
    if (n < 2) throw std::invalid_argument("subdivided_clique: need at least two vertices");
    if (t < 0) throw std::invalid_argument("subdivided_clique: negative subdivision");
    const int pairs = n * (n - 1) / 2;
    Graph g(n + pairs * t);
    int next = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int prev = i;
            for (int s = 0; s < t; ++s) {
                g.add_edge(prev, next);
                prev = next++;
            }
            g.add_edge(prev, j);
        }
    }
    return g;
}

Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need at least one vertex");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    // Random Pruefer sequence over 0..n-1.
    std::vector<int> seq(n - 2);
    for (auto& s : seq) s = static_cast<int>(rng() % n);
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<char> used(n, 0);
    Graph g(n);
    for (int v : seq) {
        int leaf = -1;
        for (int u = 0; u < n; ++u) {
            if (degree[u] == 1 && !used[u]) {
                leaf = u;
                break;
            }
        }
        g.add_edge(leaf, v);
        used[leaf] = 1;
        --degree[v];
    }
    int a = -1, b = -1;
    for (int u = 0; u < n; ++u) {
        if (degree[u] == 1 && !used[u]) {
            (a == -1 ? a : b) = u;
        }
    }
    g.add_edge(a, b);
    return g;
}

Graph generate(const std::string& family, const std::vector<long>& params,
               std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("family '" + family + "' needs " +
                                        std::to_string(count) + " parameter(s)");
        }
    };
    auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    if (family == "path") {
        need(1);
        return make_path(p(0));
    }
    if (family == "cycle") {
        need(1);
        return make_cycle(p(0));
    }
    if (family == "star") {
        need(1);
        return make_star(p(0));
    }
    if (family == "grid") {
        need(2);
        return make_grid(p(0), p(1));
    }
    if (family == "random_max_deg") {
        need(3);
        return make_random_max_deg(p(0), p(1), p(2), seed);
    }
    if (family == "subdivided_clique") {
        need(2);
        return make_subdivided_clique(p(0), p(1));
    }
    if (family == "random_tree") {
        need(1);
        return make_random_tree(p(0), seed);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace sparsedom
