#include "sparsedom/variants.hpp"

#include <algorithm>
#include <set>

namespace sparsedom {

namespace {

using detail::ScratchBfs;

// Decode a Pruefer sequence (values 1..k) into its labeled tree.
AbstractTree decode_pruefer(int k, const std::vector<int>& seq) {
    AbstractTree t;
    t.size = k;
    std::vector<int> degree(k + 1, 1);
    for (int v : seq) ++degree[v];
    std::set<int> leaves;
    for (int v = 1; v <= k; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        t.edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    t.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

}  // namespace

std::vector<AbstractTree> enumerate_trees(int k, int guard) {
    if (k < 1) throw std::invalid_argument("enumerate_trees: k must be positive");
    if (k > guard) {
        throw guard_error("enumerate_trees: k exceeds the guard (" + std::to_string(guard) +
                          ")");
    }
    std::vector<AbstractTree> out;
    if (k == 1) {
        out.push_back({1, {}});
        return out;
    }
    if (k == 2) {
        out.push_back({2, {{1, 2}}});
        return out;
    }
    std::vector<int> seq(k - 2, 1);
    while (true) {
        out.push_back(decode_pruefer(k, seq));
        int i = k - 3;
        while (i >= 0 && seq[i] == k) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

std::optional<VertexSet> select_connected(const Graph& g,
                                          const std::vector<VertexSet>& groups) {
    const int k = static_cast<int>(groups.size());
    for (const auto& grp : groups) {
        for (Vertex v : grp) g.check_vertex(v);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!disjoint(groups[i], groups[j])) {
                throw std::invalid_argument("select_connected: groups must be disjoint");
            }
        }
    }
    if (k == 0) return VertexSet{};
    for (const auto& grp : groups) {
        if (grp.empty()) return std::nullopt;
    }
    if (k == 1) return VertexSet{groups[0].members().front()};

    auto has_neighbor_in = [&](Vertex v, const std::vector<Vertex>& set) {
        for (Vertex u : g.neighbors(v)) {
            if (std::binary_search(set.begin(), set.end(), u)) return true;
        }
        return false;
    };

    for (const auto& tree : enumerate_trees(k)) {
        std::vector<std::vector<int>> tree_adj(k);
        for (auto& [a, b] : tree.edges) {
            tree_adj[a - 1].push_back(b - 1);
            tree_adj[b - 1].push_back(a - 1);
        }
        // Initial filter against the raw groups, then prune to arc
        // consistency along the tree edges.
        std::vector<std::vector<Vertex>> live(k);
        for (int i = 0; i < k; ++i) {
            for (Vertex v : groups[i]) {
                bool ok = true;
                for (int j : tree_adj[i]) {
                    if (!has_neighbor_in(v, groups[j].members())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) live[i].push_back(v);
            }
        }
        bool changed = true;
        bool dead = false;
        while (changed && !dead) {
            changed = false;
            for (int i = 0; i < k && !dead; ++i) {
                auto& pool = live[i];
                for (std::size_t p = 0; p < pool.size();) {
                    bool ok = true;
                    for (int j : tree_adj[i]) {
                        if (!has_neighbor_in(pool[p], live[j])) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        ++p;
                    } else {
                        pool.erase(pool.begin() + p);
                        changed = true;
                    }
                }
                if (pool.empty()) dead = true;
            }
        }
        if (dead) continue;

        // Extract top-down from the root; arc consistency on a tree makes
        // every greedy child pick extendable, but verify anyway and fall
        // through to the next tree shape on any surprise.
        std::vector<Vertex> pick(k, -1);
        std::vector<int> order;
        std::vector<int> parent(k, -1);
        order.push_back(0);
        for (std::size_t q = 0; q < order.size(); ++q) {
            int i = order[q];
            for (int j : tree_adj[i]) {
                if (j != parent[i]) {
                    parent[j] = i;
                    order.push_back(j);
                }
            }
        }
        bool ok = true;
        for (int i : order) {
            if (parent[i] == -1) {
                pick[i] = live[i].front();
                continue;
            }
            Vertex chosen = -1;
            for (Vertex v : live[i]) {
                if (g.has_edge(v, pick[parent[i]])) {
                    chosen = v;
                    break;
                }
            }
            if (chosen == -1) {
                ok = false;
                break;
            }
            pick[i] = chosen;
        }
        if (!ok) continue;
        VertexSet sel(pick);
        if (sel.size() == k && induces_connected(g, sel)) return sel;
    }
    return std::nullopt;
}

namespace {

// Shared partition-based core for the connectivity and efficiency variants.
// `conn` is the graph in which connectivity (or the pairwise separation
// constraint) is evaluated; domination is always in inst.graph.
struct VariantCore {
    const DominationInstance& inst;
    const CoreOptions& opts;
    const Graph* conn = nullptr;        // connectivity graph, or
    const Graph* separation = nullptr;  // pairwise non-adjacency constraint
    bool exact_size = false;

    std::optional<VertexSet> run() {
        inst.validate();
        const auto& g = inst.graph;
        const auto& w = inst.targets;
        const int k = inst.budget;
        if (w.size() > opts.guard) {
            throw guard_error("variant core: target set exceeds the guard (" +
                              std::to_string(opts.guard) + "); use the driver");
        }
        if (k > 8) throw guard_error("variant core: budget above the tree-shape guard");
        if (k == 0) {
            if (!w.empty()) return std::nullopt;
            return exact_size ? std::nullopt : std::optional<VertexSet>(VertexSet{});
        }

        ScratchBfs bfs(g.vertex_count());
        const auto& cands = inst.candidates.members();
        std::vector<std::vector<Vertex>> balls;  // per target, within candidates
        for (Vertex v : w) {
            std::vector<Vertex> in;
            const auto& dist = bfs.run(g, v, inst.radius, {});
            for (Vertex c : cands) {
                if (dist[c] != -1) in.push_back(c);
            }
            if (in.empty()) return std::nullopt;
            balls.push_back(std::move(in));
        }

        const bool whole_graph = w.size() == g.vertex_count() &&
                                 inst.candidates.size() == g.vertex_count();
        const int nw = w.size();
        std::vector<std::vector<Vertex>> blocks;
        std::optional<VertexSet> found;
        std::set<std::vector<std::vector<Vertex>>> tried;
        std::uint64_t nodes = 0;

        auto intersect = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
            std::vector<Vertex> out;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
            return out;
        };

        auto leaf = [&]() -> bool {
            const int p = static_cast<int>(blocks.size());
            int l_min = exact_size ? k : p;
            int l_max = whole_graph && !exact_size ? p : k;
            for (int l = std::max(l_min, p); l <= l_max; ++l) {
                std::vector<std::vector<Vertex>> slots = blocks;
                for (int extra = p; extra < l; ++extra) slots.push_back(cands);
                if (!tried.insert(slots).second) continue;
                if (auto x = search_slots(slots)) {
                    found = std::move(x);
                    return true;
                }
            }
            return false;
        };

        auto rec = [&](auto&& self, int idx) -> bool {
            if (++nodes > 50'000'000ULL) {
                throw guard_error("variant core: partition budget exceeded");
            }
            if (idx == nw) return leaf();
            int used = static_cast<int>(blocks.size());
            for (int b = 0; b < used; ++b) {
                auto merged = intersect(blocks[b], balls[idx]);
                if (merged.empty()) continue;
                auto saved = std::move(blocks[b]);
                blocks[b] = std::move(merged);
                if (self(self, idx + 1)) return true;
                blocks[b] = std::move(saved);
            }
            if (used < k) {
                blocks.push_back(balls[idx]);
                if (self(self, idx + 1)) return true;
                blocks.pop_back();
            }
            return false;
        };
        if (nw == 0) {
            leaf();
        } else {
            rec(rec, 0);
        }
        return found;
    }

    // Find a system of distinct representatives for the slots meeting the
    // variant's side constraints; disjoint slot systems go through the tree
    // machinery, overlapping ones through lexicographic tuple search.
    std::optional<VertexSet> search_slots(const std::vector<std::vector<Vertex>>& slots) {
        const int l = static_cast<int>(slots.size());
        if (conn != nullptr && l >= 1) {
            bool all_disjoint = true;
            for (int i = 0; i < l && all_disjoint; ++i) {
                for (int j = i + 1; j < l && all_disjoint; ++j) {
                    std::vector<Vertex> out;
                    std::set_intersection(slots[i].begin(), slots[i].end(), slots[j].begin(),
                                          slots[j].end(), std::back_inserter(out));
                    if (!out.empty()) all_disjoint = false;
                }
            }
            if (all_disjoint) {
                std::vector<VertexSet> groups;
                groups.reserve(l);
                for (const auto& s : slots) groups.push_back(VertexSet(s));
                auto sel = select_connected(*conn, groups);
                if (sel && acceptable(*sel)) return sel;
                return std::nullopt;
            }
        }
        std::vector<Vertex> chosen;
        std::uint64_t nodes = 0;
        auto rec = [&](auto&& self, int slot) -> bool {
            if (++nodes > 5'000'000ULL) {
                throw guard_error("variant core: selection budget exceeded");
            }
            if (slot == l) {
                return acceptable(VertexSet(chosen));
            }
            for (Vertex v : slots[slot]) {
                if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
                if (separation != nullptr) {
                    bool clash = false;
                    for (Vertex u : chosen) {
                        if (separation->has_edge(u, v)) {
                            clash = true;
                            break;
                        }
                    }
                    if (clash) continue;
                }
                chosen.push_back(v);
                if (self(self, slot + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return VertexSet(chosen);
        return std::nullopt;
    }

    bool acceptable(const VertexSet& x) {
        if (static_cast<int>(x.size()) > inst.budget) return false;
        if (exact_size && x.size() != inst.budget) return false;
        if (conn != nullptr && !induces_connected(*conn, x)) return false;
        if (separation != nullptr) {
            const auto& m = x.members();
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::size_t j = i + 1; j < m.size(); ++j) {
                    if (separation->has_edge(m[i], m[j])) return false;
                }
            }
        }
        return dominates(inst.graph, x, inst.targets, inst.radius);
    }
};

void check_connected_solution(const DominationInstance& inst, const Graph& conn,
                              const SolveResult& result) {
    if (result.answer != Answer::yes) return;
    const auto& x = *result.solution;
    if (!dominates(inst.graph, x, inst.targets, inst.radius) || x.size() > inst.budget ||
        !is_subset(x, inst.candidates) || !induces_connected(conn, x)) {
        throw std::logic_error("connected solver produced an invalid solution");
    }
}

}  // namespace

std::optional<VertexSet> solve_connected(const DominationInstance& inst,
                                         const CoreOptions& opts) {
    VariantCore core{inst, opts};
    core.conn = &inst.graph;
    core.exact_size = opts.exact_size;
    auto x = core.run();
    if (x && (!induces_connected(inst.graph, *x) ||
              !dominates(inst.graph, *x, inst.targets, inst.radius))) {
        throw std::logic_error("solve_connected produced an invalid solution");
    }
    return x;
}

SolveResult solve_connected_driver(const DominationInstance& inst, const ClassProfile& profile,
                                   const DriverOptions& opts) {
    auto result = detail::run_reduction_driver(
        inst, profile, opts,
        [](const DominationInstance& small, const CoreOptions& copts) {
            return solve_connected(small, copts);
        },
        nullptr);
    check_connected_solution(inst, inst.graph, result);
    return result;
}

std::optional<VertexSet> solve_d_connected(const DominationInstance& inst,
                                           const CoreOptions& opts) {
    if (inst.radius < 1) {
        throw std::invalid_argument("solve_d_connected: radius must be positive");
    }
    Graph conn = power(inst.graph, inst.radius);
    VariantCore core{inst, opts};
    core.conn = &conn;
    core.exact_size = opts.exact_size;
    auto x = core.run();
    if (x && (!induces_connected(conn, *x) ||
              !dominates(inst.graph, *x, inst.targets, inst.radius))) {
        throw std::logic_error("solve_d_connected produced an invalid solution");
    }
    return x;
}

SolveResult solve_d_connected_driver(const DominationInstance& inst,
                                     const ClassProfile& profile, const DriverOptions& opts) {
    if (inst.radius < 1) {
        throw std::invalid_argument("solve_d_connected: radius must be positive");
    }
    Graph conn = power(inst.graph, inst.radius);
    auto result = detail::run_reduction_driver(
        inst, profile, opts,
        [&conn](const DominationInstance& small, const CoreOptions& copts) {
            VariantCore core{small, copts};
            core.conn = &conn;
            core.exact_size = copts.exact_size;
            return core.run();
        },
        nullptr);
    check_connected_solution(inst, conn, result);
    return result;
}

SolveResult solve_efficient(const Graph& g, int k, const ClassProfile& profile,
                            const DriverOptions& opts) {
    if (k < 1) throw std::invalid_argument("solve_efficient: k must be positive");
    auto inst = DominationInstance::make(g, k, 1);
    Graph p2 = power(g, 2);
    auto result = detail::run_reduction_driver(
        inst, profile, opts,
        [&p2](const DominationInstance& small, const CoreOptions& copts) {
            VariantCore core{small, copts};
            core.separation = &p2;
            core.exact_size = true;  // the problem fixes |X| = k
            return core.run();
        },
        nullptr);
    if (result.answer == Answer::yes) {
        const auto& x = *result.solution;
        bool ok = static_cast<int>(x.size()) == k && dominates(g, x, inst.targets, 1);
        const auto& m = x.members();
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < m.size() && ok; ++j) {
                if (p2.has_edge(m[i], m[j])) ok = false;
            }
        }
        if (!ok) throw std::logic_error("solve_efficient produced an invalid solution");
    }
    return result;
}

int RomanLabeling::weight() const {
    int w = 0;
    for (int l : labels) w += l;
    return w;
}

bool RomanLabeling::valid(const Graph& g) const {
    if (static_cast<int>(labels.size()) != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (labels[v] < 0 || labels[v] > 2) return false;
        if (labels[v] == 0) {
            bool served = false;
            for (Vertex u : g.neighbors(v)) {
                if (labels[u] == 2) {
                    served = true;
                    break;
                }
            }
            if (!served) return false;
        }
    }
    return true;
}

namespace {

enum class Tri { yes, no, inconclusive };

struct RomanSearch {
    const Graph& g;
    const RomanOptions& opts;
    std::vector<int> labels;
    ScratchBfs bfs;

    RomanSearch(const Graph& g_, const RomanOptions& o)
        : g(g_), opts(o), labels(g_.vertex_count(), 0), bfs(g_.vertex_count()) {}

    VertexSet closed_neighborhood(Vertex v) {
        std::vector<Vertex> out = {v};
        for (Vertex u : g.neighbors(v)) out.push_back(u);
        return VertexSet(std::move(out));
    }

    // Decide whether the remaining requirement can be satisfied with the
    // remaining budget. Committed 2-labels stay in `labels`.
    Tri rec(const VertexSet& requirement, int budget) {
        if (requirement.empty()) return Tri::yes;
        if (budget <= 0) return Tri::no;
        if (g.vertex_count() <= opts.base_vertex_limit) return base(requirement, budget);

        for (int s_try = 0; s_try <= opts.s_cap; ++s_try) {
            if (2 * budget + 1 > requirement.size()) break;
            ScatterOptions sopts;
            sopts.branch_vertex_limit = opts.branch_vertex_limit;
            auto fs = find_scattered(g, requirement, 2, 2 * budget + 1, s_try + 2, sopts);
            if (!fs.ok()) continue;
            const auto& bottleneck = fs.witness->bottleneck;
            // With an empty bottleneck the pigeonhole leaves no vertex that
            // could serve the scattered zeros: unsatisfiable.
            if (bottleneck.empty()) return Tri::no;
            // Some bottleneck vertex must take label 2, which is already
            // unaffordable here.
            if (budget < 2) return Tri::no;
            bool saw_inconclusive = false;
            for (Vertex s : bottleneck) {
                if (labels[s] == 2) continue;  // already committed, cannot help again
                labels[s] = 2;
                Tri t = rec(set_minus(requirement, closed_neighborhood(s)), budget - 2);
                if (t == Tri::yes) return Tri::yes;
                labels[s] = 0;
                if (t == Tri::inconclusive) saw_inconclusive = true;
            }
            return saw_inconclusive ? Tri::inconclusive : Tri::no;
        }
        return base(requirement, budget);
    }

    // Exhaustive finish: choose the 2-labeled support among vertices that
    // can serve the requirement; whatever remains unserved takes label 1.
    Tri base(const VertexSet& requirement, int budget) {
        std::vector<Vertex> cand2 = requirement.members();
        {
            std::vector<char> seen(g.vertex_count(), 0);
            for (Vertex v : requirement) seen[v] = 1;
            for (Vertex v : requirement) {
                for (Vertex u : g.neighbors(v)) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        cand2.push_back(u);
                    }
                }
            }
            std::sort(cand2.begin(), cand2.end());
        }
        const int max2 = budget / 2;
        {
            double combos = 1, term = 1;
            const int n = static_cast<int>(cand2.size());
            for (int t = 1; t <= std::min(max2, n); ++t) {
                term = term * (n - t + 1) / t;
                combos += term;
            }
            if (combos > opts.base_budget) return Tri::inconclusive;
        }
        std::vector<char> served(g.vertex_count(), 0);
        std::vector<int> combo;
        auto evaluate = [&]() -> bool {
            std::fill(served.begin(), served.end(), 0);
            for (int c : combo) {
                Vertex v = cand2[c];
                served[v] = 1;
                for (Vertex u : g.neighbors(v)) served[u] = 1;
            }
            int cost = 2 * static_cast<int>(combo.size());
            std::vector<Vertex> ones;
            for (Vertex v : requirement) {
                if (!served[v]) {
                    ones.push_back(v);
                    if (cost + static_cast<int>(ones.size()) > budget) return false;
                }
            }
            if (cost + static_cast<int>(ones.size()) > budget) return false;
            for (int c : combo) labels[cand2[c]] = 2;
            for (Vertex v : ones) labels[v] = 1;
            return true;
        };
        const int n = static_cast<int>(cand2.size());
        for (int size = 0; size <= std::min(max2, n); ++size) {
            combo.assign(size, 0);
            for (int i = 0; i < size; ++i) combo[i] = i;
            while (true) {
                if (evaluate()) return Tri::yes;
                if (size == 0) break;
                int i = size - 1;
                while (i >= 0 && combo[i] == n - size + i) --i;
                if (i < 0) break;
                ++combo[i];
                for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
            }
        }
        return Tri::no;
    }
};

}  // namespace

RomanResult solve_roman(const Graph& g, int k, const RomanOptions& opts) {
    if (k < 0) throw std::invalid_argument("solve_roman: negative budget");
    RomanResult result;
    RomanSearch search(g, opts);
    Tri t = search.rec(VertexSet::full(g.vertex_count()), k);
    switch (t) {
        case Tri::yes: {
            RomanLabeling lab{std::move(search.labels)};
            if (!lab.valid(g) || lab.weight() > k) {
                throw std::logic_error("solve_roman produced an invalid labeling");
            }
            result.answer = Answer::yes;
            result.labeling = std::move(lab);
            break;
        }
        case Tri::no:
            result.answer = Answer::no;
            break;
        case Tri::inconclusive:
            result.answer = Answer::inconclusive;
            result.note = "no scattered witness and the base search is beyond its budget";
            break;
    }
    return result;
}

}  // namespace sparsedom
