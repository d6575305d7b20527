#include "sparsedom/gadget.hpp"

#include <algorithm>

namespace sparsedom {

namespace {

// Mutable edge lists while the trees are grafted in; converted to a Graph at
// the end.
struct Builder {
    std::vector<std::vector<Vertex>> out;
    int next_id;

    explicit Builder(int n) : out(n), next_id(n) {}

    int fresh() {
        out.emplace_back();
        return next_id++;
    }

    // Balanced binary tree over `leaves`, returning its root. toward_root
    // selects the edge orientation.
    int build_tree(const std::vector<Vertex>& leaves, bool toward_root) {
        if (leaves.size() == 1) return leaves[0];
        std::size_t half = (leaves.size() + 1) / 2;
        std::vector<Vertex> left(leaves.begin(), leaves.begin() + half);
        std::vector<Vertex> right(leaves.begin() + half, leaves.end());
        int l = build_tree(left, toward_root);
        int r = build_tree(right, toward_root);
        int root = fresh();
        if (toward_root) {
            out[l].push_back(root);
            out[r].push_back(root);
        } else {
            out[root].push_back(l);
            out[root].push_back(r);
        }
        return root;
    }
};

}  // namespace

GadgetResult degree_reduction_gadget(const Graph& digraph,
                                     const std::vector<std::pair<Vertex, Vertex>>& terminals) {
    if (!digraph.directed()) {
        throw std::invalid_argument("degree_reduction_gadget: needs a directed graph");
    }
    for (const auto& [s, t] : terminals) {
        digraph.check_vertex(s);
        digraph.check_vertex(t);
    }
    const int n = digraph.vertex_count();
    Builder b(n);
    for (Vertex v = 0; v < n; ++v) b.out[v] = digraph.neighbors(v);

    // In-trees first: reroute every multi-fan-in through a binary tree whose
    // root merges into v. The former in-neighbors' out-edges are retargeted
    // at their leaves' parents, so in-lists are taken from the original
    // graph once.
    std::vector<std::vector<Vertex>> in_lists(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : digraph.neighbors(u)) in_lists[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        const auto& ins = in_lists[v];
        if (ins.size() <= 1) continue;
        for (Vertex u : ins) {
            auto& lst = b.out[u];
            lst.erase(std::find(lst.begin(), lst.end(), v));
        }
        // Build the tree over the sources; its root's edges point at v.
        std::size_t half = (ins.size() + 1) / 2;
        std::vector<Vertex> left(ins.begin(), ins.begin() + half);
        std::vector<Vertex> right(ins.begin() + half, ins.end());
        int l = b.build_tree(left, true);
        int r = b.build_tree(right, true);
        b.out[l].push_back(v);
        b.out[r].push_back(v);
    }

    // Out-trees second over the current adjacency; only original vertices
    // can still exceed out-degree one.
    for (Vertex v = 0; v < n; ++v) {
        auto outs = b.out[v];
        if (outs.size() <= 1) continue;
        b.out[v].clear();
        std::size_t half = (outs.size() + 1) / 2;
        std::vector<Vertex> left(outs.begin(), outs.begin() + half);
        std::vector<Vertex> right(outs.begin() + half, outs.end());
        int l = b.build_tree(left, false);
        int r = b.build_tree(right, false);
        b.out[v].push_back(l);
        b.out[v].push_back(r);
    }

    GadgetResult res;
    res.original_vertices = n;
    res.terminals = terminals;
    Graph g(b.next_id, true);
    for (Vertex u = 0; u < b.next_id; ++u) {
        for (Vertex v : b.out[u]) g.add_edge(u, v);
    }
    res.graph = std::move(g);
    return res;
}

}  // namespace sparsedom
