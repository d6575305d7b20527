#include "sparsedom/graph.hpp"

#include <algorithm>
#include <queue>

namespace sparsedom {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : members_(ids) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.members_.resize(n);
    for (int i = 0; i < n; ++i) s.members_[i] = i;
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return false;
    }
    return true;
}

Graph::Graph(int n, bool directed) : n_(n), directed_(directed), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, bool directed)
    : Graph(n, directed) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::upper_bound(list.begin(), list.end(), v), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
    insert_sorted(adj_[u], v);
    if (!directed_) insert_sorted(adj_[v], u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : adj_[u]) {
            if (directed_ || u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

namespace detail {

void truncated_bfs(const Graph& g, Vertex src, int cap,
                   const std::vector<char>& blocked,
                   std::vector<int>& dist, std::vector<Vertex>& touched) {
    truncated_bfs_multi(g, {src}, cap, blocked, dist, touched);
}

void truncated_bfs_multi(const Graph& g, const std::vector<Vertex>& sources, int cap,
                         const std::vector<char>& blocked,
                         std::vector<int>& dist, std::vector<Vertex>& touched) {
    const bool have_blocked = !blocked.empty();
    std::size_t head = touched.size();
    for (Vertex s : sources) {
        g.check_vertex(s);
        if (have_blocked && blocked[s]) continue;
        if (dist[s] != -1) continue;
        dist[s] = 0;
        touched.push_back(s);
    }
    while (head < touched.size()) {
        Vertex u = touched[head++];
        if (dist[u] == cap) continue;
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] != -1) continue;
            if (have_blocked && blocked[v]) continue;
            dist[v] = dist[u] + 1;
            touched.push_back(v);
        }
    }
}

void ScratchBfs::reset() {
    for (Vertex v : touched_) dist_[v] = -1;
    touched_.clear();
}

const std::vector<int>& ScratchBfs::run(const Graph& g, Vertex src, int cap,
                                        const std::vector<char>& blocked) {
    reset();
    truncated_bfs(g, src, cap, blocked, dist_, touched_);
    return dist_;
}

const std::vector<int>& ScratchBfs::run_multi(const Graph& g,
                                              const std::vector<Vertex>& sources, int cap,
                                              const std::vector<char>& blocked) {
    reset();
    truncated_bfs_multi(g, sources, cap, blocked, dist_, touched_);
    return dist_;
}

}  // namespace detail

std::map<Vertex, int> bfs_distances(const Graph& g, Vertex v, int cap) {
    g.check_vertex(v);
    if (cap < 0) throw std::invalid_argument("bfs_distances: negative cap");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> touched;
    detail::truncated_bfs(g, v, cap, {}, dist, touched);
    std::map<Vertex, int> out;
    for (Vertex u : touched) out[u] = dist[u];
    return out;
}

VertexSet ball(const Graph& g, Vertex v, int d) {
    g.check_vertex(v);
    if (d < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> touched;
    detail::truncated_bfs(g, v, d, {}, dist, touched);
    return VertexSet(std::move(touched));
}

VertexSet DeletionResult::to_new(const VertexSet& old_ids) const {
    std::vector<Vertex> out;
    for (Vertex v : old_ids) {
        if (v < 0 || v >= static_cast<int>(old_to_new.size())) {
            throw std::out_of_range("to_new: vertex out of range");
        }
        if (old_to_new[v] != -1) out.push_back(old_to_new[v]);
    }
    return VertexSet(std::move(out));
}

VertexSet DeletionResult::to_old(const VertexSet& new_ids) const {
    std::vector<Vertex> out;
    for (Vertex v : new_ids) {
        if (v < 0 || v >= static_cast<int>(new_to_old.size())) {
            throw std::out_of_range("to_old: vertex out of range");
        }
        out.push_back(new_to_old[v]);
    }
    return VertexSet(std::move(out));
}

DeletionResult remove_vertices(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    for (Vertex v : s) g.check_vertex(v);
    DeletionResult res;
    res.old_to_new.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!s.contains(v)) {
            res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
            res.new_to_old.push_back(v);
        }
    }
    Graph h(static_cast<int>(res.new_to_old.size()), g.directed());
    for (Vertex u = 0; u < n; ++u) {
        if (res.old_to_new[u] == -1) continue;
        for (Vertex v : g.neighbors(u)) {
            if (res.old_to_new[v] == -1) continue;
            if (!g.directed() && u > v) continue;
            h.add_edge(res.old_to_new[u], res.old_to_new[v]);
        }
    }
    res.graph = std::move(h);
    return res;
}

Graph power(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("power: exponent must be positive");
    const int n = g.vertex_count();
    Graph h(n, g.directed());
    detail::ScratchBfs bfs(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto& dist = bfs.run(g, u, d, {});
        for (Vertex v = g.directed() ? 0 : u + 1; v < n; ++v) {
            if (v != u && dist[v] != -1) h.add_edge(u, v);
        }
    }
    return h;
}

bool is_scattered(const Graph& g, const VertexSet& a, int r) {
    if (r < 0) throw std::invalid_argument("is_scattered: negative radius");
    for (Vertex v : a) g.check_vertex(v);
    if (a.size() <= 1) return true;
    detail::ScratchBfs bfs(g.vertex_count());
    for (Vertex v : a) {
        const auto& dist = bfs.run(g, v, 2 * r, {});
        for (Vertex u : a) {
            if (u != v && dist[u] != -1) return false;
        }
    }
    return true;
}

bool dominates(const Graph& g, const VertexSet& x, const VertexSet& w, int d) {
    if (d < 0) throw std::invalid_argument("dominates: negative radius");
    for (Vertex v : x) g.check_vertex(v);
    for (Vertex v : w) g.check_vertex(v);
    if (w.empty()) return true;
    detail::ScratchBfs bfs(g.vertex_count());
    const auto& dist = bfs.run_multi(g, x.members(), d, {});
    for (Vertex u : w) {
        if (dist[u] == -1) return false;
    }
    return true;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.size() <= 1) return true;
    std::vector<char> inside(g.vertex_count(), 0);
    for (Vertex v : s) {
        g.check_vertex(v);
        inside[v] = 1;
    }
    std::vector<Vertex> stack = {s.members().front()};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[stack[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex v : g.neighbors(u)) {
            if (inside[v] && !seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return reached == s.size();
}

AllPairsCache::AllPairsCache(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > 4096) throw guard_error("all-pairs cache limited to 4096 vertices");
    dist_.assign(n_, {});
    detail::ScratchBfs bfs(n_);
    for (Vertex v = 0; v < n_; ++v) {
        dist_[v] = bfs.run(g, v, n_, {});
    }
}

int AllPairsCache::distance(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("distance: bad vertex");
    return dist_[u][v];
}

}  // namespace sparsedom
