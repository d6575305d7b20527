#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsedom {

using Vertex = int;

// Thrown when an operation refuses to run because its size guard tripped.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorted set of vertex ids. Kept sorted and duplicate-free so iteration
// order is deterministic everywhere.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    static VertexSet full(int n);

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

// Simple graph over dense ids 0..n-1. Neighbor lists are sorted ascending;
// undirected graphs store both directions. No self-loops, no multi-edges.
class Graph {
public:
    explicit Graph(int n = 0, bool directed = false);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, bool directed = false);

    int vertex_count() const { return n_; }
    long edge_count() const { return edge_count_; }
    bool directed() const { return directed_; }

    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;

    // Edges as (u, v) with u < v for undirected graphs, in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void check_vertex(Vertex v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    bool directed_ = false;
    long edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

// Exact distances from v, truncated: vertices farther than cap are omitted.
std::map<Vertex, int> bfs_distances(const Graph& g, Vertex v, int cap);

// Closed ball of radius d around v; always contains v.
VertexSet ball(const Graph& g, Vertex v, int d);

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<Vertex> new_to_old;

    VertexSet to_new(const VertexSet& old_ids) const;
    VertexSet to_old(const VertexSet& new_ids) const;
};

// Induced subgraph on V(g) minus s, compacted, with the id remap both ways.
DeletionResult remove_vertices(const Graph& g, const VertexSet& s);

// Graph with an edge between every pair at distance in [1, d].
Graph power(const Graph& g, int d);

// True iff the radius-r balls of the members of a are pairwise disjoint
// (equivalently, all pairwise distances exceed 2r).
bool is_scattered(const Graph& g, const VertexSet& a, int r);

// True iff every vertex of w lies within distance d of some member of x.
bool dominates(const Graph& g, const VertexSet& x, const VertexSet& w, int d);

// True iff the subgraph induced by s is connected (empty and singleton sets
// count as connected).
bool induces_connected(const Graph& g, const VertexSet& s);

// Opt-in all-pairs distance table for small graphs (n <= 4096).
class AllPairsCache {
public:
    explicit AllPairsCache(const Graph& g);
    int distance(Vertex u, Vertex v) const;  // -1 when unreachable

private:
    int n_;
    std::vector<std::vector<int>> dist_;
};

namespace detail {

// Truncated BFS workhorse. dist must be sized n and filled with -1; visited
// vertices are appended to touched and must be reset by the caller (or use
// ScratchBfs below). blocked may be empty, meaning no vertex is blocked.
void truncated_bfs(const Graph& g, Vertex src, int cap,
                   const std::vector<char>& blocked,
                   std::vector<int>& dist, std::vector<Vertex>& touched);

// Multi-source variant; sources get distance 0.
void truncated_bfs_multi(const Graph& g, const std::vector<Vertex>& sources, int cap,
                         const std::vector<char>& blocked,
                         std::vector<int>& dist, std::vector<Vertex>& touched);

// Reusable BFS scratch space bound to a fixed vertex count.
class ScratchBfs {
public:
    explicit ScratchBfs(int n) : dist_(n, -1) {}

    const std::vector<int>& run(const Graph& g, Vertex src, int cap,
                                const std::vector<char>& blocked);
    const std::vector<int>& run_multi(const Graph& g, const std::vector<Vertex>& sources,
                                      int cap, const std::vector<char>& blocked);
    const std::vector<int>& dist() const { return dist_; }
    const std::vector<Vertex>& touched() const { return touched_; }

private:
    void reset();
    std::vector<int> dist_;
    std::vector<Vertex> touched_;
};

}  // namespace detail

}  // namespace sparsedom
