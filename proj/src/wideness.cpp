#include "sparsedom/wideness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace sparsedom {

namespace {

using detail::ScratchBfs;

std::vector<char> make_blocked(int n, const VertexSet& s) {
    std::vector<char> blocked(n, 0);
    for (Vertex v : s) blocked[v] = 1;
    return blocked;
}

// Degree-ascending order (ties by id) restricted to unblocked neighbors.
// Ascending id is the canonical order; this one rescues hub-dominated
// graphs where the lowest id happens to be the hub.
std::vector<Vertex> order_min_degree(const Graph& g, const std::vector<Vertex>& members,
                                     const std::vector<char>& blocked) {
    std::vector<std::pair<int, Vertex>> keyed;
    keyed.reserve(members.size());
    for (Vertex v : members) {
        int deg = 0;
        for (Vertex u : g.neighbors(v)) {
            if (!blocked[u]) ++deg;
        }
        keyed.emplace_back(deg, v);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    std::vector<Vertex> out;
    out.reserve(keyed.size());
    for (auto& [deg, v] : keyed) out.push_back(v);
    return out;
}

// Greedy packing: accept a candidate iff it is farther than `gap` from every
// previously accepted vertex in g minus blocked.
std::vector<Vertex> greedy_far_apart(const Graph& g, const std::vector<Vertex>& order, int gap,
                                     const std::vector<char>& blocked, ScratchBfs& bfs,
                                     std::vector<char>& covered) {
    std::fill(covered.begin(), covered.end(), 0);
    std::vector<Vertex> picked;
    for (Vertex v : order) {
        if (blocked[v] || covered[v]) continue;
        picked.push_back(v);
        bfs.run(g, v, gap, blocked);
        for (Vertex u : bfs.touched()) covered[u] = 1;
    }
    return picked;
}

// Lexicographically first packing of exactly `want` pool members pairwise
// farther than `gap`; exact search, intended for tiny graphs.
std::optional<std::vector<Vertex>> exact_packing(const Graph& g,
                                                 const std::vector<Vertex>& pool, int gap,
                                                 int want, const std::vector<char>& blocked,
                                                 ScratchBfs& bfs) {
    const int p = static_cast<int>(pool.size());
    if (p < want) return std::nullopt;
    std::vector<std::vector<char>> conflict(p, std::vector<char>(p, 0));
    for (int i = 0; i < p; ++i) {
        const auto& dist = bfs.run(g, pool[i], gap, blocked);
        for (int j = 0; j < p; ++j) {
            if (j != i && dist[pool[j]] != -1) conflict[i][j] = 1;
        }
    }
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == want) return true;
        for (int i = from; i < p; ++i) {
            if (p - i < want - static_cast<int>(chosen.size())) return false;
            bool ok = true;
            for (int c : chosen) {
                if (conflict[c][i]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<Vertex> out;
    out.reserve(want);
    for (int c : chosen) out.push_back(pool[c]);
    return out;
}

struct PumpOutcome {
    VertexSet pumped;
    std::vector<Vertex> members;
};

struct StageChoice {
    VertexSet pumped;               // vertices moved into the bottleneck
    std::vector<Vertex> survivors;  // next stage's member set, sorted
};

class Extractor {
public:
    Extractor(const Graph& g, const VertexSet& w, int r, int m, int h,
              const ScatterOptions& opts)
        : g_(g), w_(w), r_(r), m_(m), h_(h), opts_(opts), bfs_(g.vertex_count()),
          covered_(g.vertex_count(), 0) {}

    ScatterResult run() {
        if (w_.size() < m_) {
            return {std::nullopt, {0, "target set smaller than requested scattered size"}};
        }
        if (r_ == 0) return make_witness(VertexSet{}, w_);
        fail_ = {0, "survivors below target"};
        if (opts_.mode == ExtractionMode::paper_faithful) return run_paper();
        auto res = search(0, VertexSet{}, w_);
        if (res) return std::move(*res);
        return {std::nullopt, fail_};
    }

private:
    ScatterResult make_witness(VertexSet s, VertexSet a) {
        if (a.size() > m_) {
            // The first m survivors are the witness; callers asked for m.
            std::vector<Vertex> trimmed(a.members().begin(), a.members().begin() + m_);
            a = VertexSet(std::move(trimmed));
        }
        ScatteredWitness wit{std::move(s), std::move(a), r_, &g_};
        if (!is_subset(wit.scattered, w_) || !disjoint(wit.scattered, wit.bottleneck) ||
            wit.bottleneck.size() > h_ - 2 || wit.scattered.size() < m_ ||
            !far_apart_under(wit.bottleneck, wit.scattered.members(), 2 * r_)) {
            throw std::logic_error("find_scattered produced an invalid witness");
        }
        return {std::move(wit), {}};
    }

    // True iff members are pairwise farther than `gap` in g minus s.
    bool far_apart_under(const VertexSet& s, const std::vector<Vertex>& members, int gap) {
        auto blocked = make_blocked(g_.vertex_count(), s);
        for (Vertex v : members) {
            if (blocked[v]) return false;
            const auto& dist = bfs_.run(g_, v, gap, blocked);
            for (Vertex u : members) {
                if (u != v && dist[u] != -1) return false;
            }
        }
        return true;
    }

    void notify(int stage, const VertexSet& s, const VertexSet& members) {
        if (opts_.observer) opts_.observer({stage, s, members});
    }

    // One hub-pumping chain: repeatedly move the best-covered vertex into the
    // bottleneck while its coverage clears the threshold. shrink_to_covered
    // keeps only the members the hub covered; otherwise just the hub is
    // dropped. paper_thresholds, when given, replace the adaptive rule.
    PumpOutcome pump_chain(std::vector<Vertex> members, int reach, std::vector<char> blocked,
                           int pump_budget, bool shrink_to_covered,
                           const std::vector<BigBound>* paper_thresholds) {
        PumpOutcome out;
        const int n = g_.vertex_count();
        std::vector<int> count(n);
        for (int j = 0; j < pump_budget; ++j) {
            std::fill(count.begin(), count.end(), 0);
            for (Vertex v : members) {
                bfs_.run(g_, v, reach, blocked);
                for (Vertex z : bfs_.touched()) ++count[z];
            }
            Vertex best = -1;
            for (Vertex z = 0; z < n; ++z) {
                if (!blocked[z] && count[z] > (best == -1 ? 0 : count[best])) best = z;
            }
            if (best == -1) break;
            bool pump;
            if (paper_thresholds) {
                pump = BigBound(static_cast<std::uint64_t>(count[best])) >
                       (*paper_thresholds)[j];
            } else {
                long threshold = std::max<long>(
                    opts_.pump_floor, static_cast<long>(members.size()) *
                                          opts_.pump_shrink_num / opts_.pump_shrink_den);
                pump = count[best] > threshold;
            }
            if (!pump) break;
            std::vector<Vertex> next;
            if (shrink_to_covered) {
                const auto& dist = bfs_.run(g_, best, reach, blocked);
                for (Vertex v : members) {
                    if (v != best && dist[v] != -1) next.push_back(v);
                }
            } else {
                for (Vertex v : members) {
                    if (v != best) next.push_back(v);
                }
            }
            blocked[best] = 1;
            out.pumped.insert(best);
            members = std::move(next);
        }
        out.members = std::move(members);
        return out;
    }

    std::vector<std::vector<Vertex>> make_orders(const std::vector<Vertex>& pool,
                                                 const std::vector<char>& blocked) {
        std::vector<std::vector<Vertex>> orders;
        orders.push_back(pool);
        auto mind = order_min_degree(g_, pool, blocked);
        if (mind != orders[0]) orders.push_back(std::move(mind));
        return orders;
    }

    // Append one choice per candidate order: the greedy packing of `pool`
    // at the next stage's separation gap.
    void add_packing_choices(std::vector<StageChoice>& choices, const VertexSet& pumped,
                             const std::vector<Vertex>& pool,
                             const std::vector<char>& pool_blocked, int reach) {
        for (const auto& order : make_orders(pool, pool_blocked)) {
            auto j = greedy_far_apart(g_, order, 2 * reach, pool_blocked, bfs_, covered_);
            std::sort(j.begin(), j.end());
            choices.push_back({pumped, std::move(j)});
        }
    }

    std::vector<StageChoice> stage_choices(int stage, const VertexSet& s,
                                           const VertexSet& members) {
        const int n = g_.vertex_count();
        const int reach = stage + 1;
        const int pump_budget = (h_ - 2) - s.size();
        auto blocked = make_blocked(n, s);
        std::vector<StageChoice> choices;

        // Staged construction: linked-neighborhood independent set, hub
        // pumping, then packing among the survivors.
        for (const auto& order : make_orders(members.members(), blocked)) {
            auto independent =
                greedy_far_apart(g_, order, 2 * stage + 1, blocked, bfs_, covered_);
            auto pumped = pump_chain(independent, reach, blocked, pump_budget,
                                     /*shrink_to_covered=*/true, nullptr);
            auto pool_blocked = blocked;
            for (Vertex z : pumped.pumped) pool_blocked[z] = 1;
            add_packing_choices(choices, pumped.pumped, pumped.members, pool_blocked, reach);
        }

        // Direct packing with no pumping.
        add_packing_choices(choices, {}, members.members(), blocked, reach);

        // Hub pumping over the whole member set, keeping uncovered members.
        {
            auto pumped = pump_chain(members.members(), reach, blocked, pump_budget,
                                     /*shrink_to_covered=*/false, nullptr);
            auto pool_blocked = blocked;
            for (Vertex z : pumped.pumped) pool_blocked[z] = 1;
            add_packing_choices(choices, pumped.pumped, pumped.members, pool_blocked, reach);
        }

        // Tiny graphs: try every bottleneck extension drawn from vertices
        // that can lie on a short path between members, and pair each with
        // an exact target-gap packing, so small instances match the
        // exhaustive reference.
        if (n <= opts_.branch_vertex_limit) {
            const int final_gap = 2 * r_;
            std::vector<Vertex> useful;
            {
                std::vector<char> seen(n, 0);
                const int influence = std::max(reach, final_gap - 1);
                for (Vertex v : members) {
                    bfs_.run(g_, v, influence, blocked);
                    for (Vertex z : bfs_.touched()) {
                        if (!seen[z]) {
                            seen[z] = 1;
                            useful.push_back(z);
                        }
                    }
                }
                std::sort(useful.begin(), useful.end());
            }
            std::vector<Vertex> zset;
            enumerate_subsets(useful, 0, std::max(pump_budget, 0), zset,
                              [&](const std::vector<Vertex>& zs) {
                auto pool_blocked = blocked;
                for (Vertex z : zs) pool_blocked[z] = 1;
                std::vector<Vertex> pool;
                for (Vertex v : members) {
                    if (!pool_blocked[v]) pool.push_back(v);
                }
                if (!zs.empty()) {
                    add_packing_choices(choices, VertexSet(zs), pool, pool_blocked, reach);
                }
                // A packing at the final separation survives every later
                // stage unchanged, which makes this branch complete for the
                // whole extraction, not just this stage.
                if (auto exact = exact_packing(g_, pool, final_gap, m_, pool_blocked, bfs_)) {
                    choices.push_back({VertexSet(zs), std::move(*exact)});
                }
            });
        }
        return choices;
    }

    template <typename F>
    void enumerate_subsets(const std::vector<Vertex>& pool, std::size_t idx, int max_size,
                           std::vector<Vertex>& current, F&& visit) {
        visit(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (std::size_t i = idx; i < pool.size(); ++i) {
            current.push_back(pool[i]);
            enumerate_subsets(pool, i + 1, max_size, current, visit);
            current.pop_back();
        }
    }

    // Depth-first search over stage outcomes; first success wins. Distinct
    // strategies frequently coincide, so successor states are deduplicated.
    std::optional<ScatterResult> search(int stage, const VertexSet& s,
                                        const VertexSet& members) {
        if (members.size() < m_) {
            if (stage >= fail_.stage) fail_ = {stage, "survivors below target"};
            return std::nullopt;
        }
        notify(stage, s, members);
        if (stage == r_) return make_witness(s, members);

        auto choices = stage_choices(stage, s, members);
        std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> seen;
        for (auto& choice : choices) {
            VertexSet s_next = set_union(s, choice.pumped);
            if (!seen.insert({s_next.members(), choice.survivors}).second) continue;
            auto res = search(stage + 1, s_next, VertexSet(choice.survivors));
            if (res) return res;
        }
        return std::nullopt;
    }

    ScatterResult run_paper();

    const Graph& g_;
    VertexSet w_;
    const int r_;
    const int m_;
    const int h_;
    const ScatterOptions& opts_;
    ScratchBfs bfs_;
    std::vector<char> covered_;
    ScatterFailure fail_;
};

// Paper-faithful run: single pass over the stages with the homogeneity-style
// thresholds and the per-stage size conditions enforced. At desk scale the
// thresholds are usually saturated, in which case this fails honestly.
ScatterResult Extractor::run_paper() {
    const Saturating& sat = opts_.arith;
    // composed[t] = t-fold composition of the stage threshold on m.
    std::vector<BigBound> composed(r_ + 1);
    composed[0] = BigBound(static_cast<std::uint64_t>(m_));
    for (int t = 1; t <= r_; ++t) {
        composed[t] = n_threshold(h_, 1, composed[t - 1], sat, opts_.reading);
    }
    const BigBound big_n = composed[r_];
    if (BigBound(static_cast<std::uint64_t>(w_.size())) <= big_n) {
        return {std::nullopt, {0, "target set not above the quasi-wideness threshold"}};
    }
    // The staged argument only needs N+1 members; trim deterministically.
    VertexSet members = w_;
    {
        std::uint64_t keep = big_n.as_u64() + 1;
        if (members.size() > static_cast<int>(keep)) {
            std::vector<Vertex> trimmed(members.members().begin(),
                                        members.members().begin() + keep);
            members = VertexSet(std::move(trimmed));
        }
    }
    VertexSet s;
    notify(0, s, members);
    for (int stage = 0; stage < r_; ++stage) {
        const int reach = stage + 1;
        const int pump_budget = (h_ - 2) - s.size();
        auto blocked = make_blocked(g_.vertex_count(), s);
        // Thresholds for pump step j at this stage.
        BigBound base = composed[r_ - (stage + 1)];
        std::vector<BigBound> thresholds(std::max(pump_budget, 0));
        for (int j = 0; j < pump_budget; ++j) {
            BigBound t = base;
            for (int it = 0; it < (h_ - 2) - j; ++it) {
                BigBound arg = sat.mul(BigBound(static_cast<std::uint64_t>(h_ - 2)),
                                       sat.add(t, BigBound(1)));
                t = ramsey_upper(opts_.reading == InnerColors::h_plus_one ? h_ + 1 : h_ - 1,
                                 h_, arg, sat);
            }
            thresholds[j] = t;
        }
        BigBound independent_floor = thresholds.empty() ? base : thresholds[0];

        bool advanced = false;
        for (const auto& order : make_orders(members.members(), blocked)) {
            auto independent =
                greedy_far_apart(g_, order, 2 * stage + 1, blocked, bfs_, covered_);
            if (BigBound(static_cast<std::uint64_t>(independent.size())) <=
                independent_floor) {
                continue;
            }
            auto pumped = pump_chain(independent, reach, blocked, pump_budget,
                                     /*shrink_to_covered=*/true, &thresholds);
            auto pool_blocked = blocked;
            for (Vertex z : pumped.pumped) pool_blocked[z] = 1;
            auto j = greedy_far_apart(g_, pumped.members, 2 * reach, pool_blocked, bfs_,
                                      covered_);
            std::sort(j.begin(), j.end());
            if (BigBound(static_cast<std::uint64_t>(j.size())) <= composed[r_ - (stage + 1)]) {
                continue;
            }
            s = set_union(s, pumped.pumped);
            members = VertexSet(j);
            advanced = true;
            break;
        }
        if (!advanced) {
            return {std::nullopt,
                    {stage, "stage sizes fell below the homogeneity thresholds"}};
        }
        if (s.size() > h_ - 2) {
            return {std::nullopt, {stage, "bottleneck exceeded its size bound"}};
        }
        if (!far_apart_under(s, members.members(), 2 * reach)) {
            throw std::logic_error("stage survivors lost their separation");
        }
        if (opts_.check_adjacency_condition && reach >= 1) {
            for (Vertex v : s) {
                bool ok = false;
                for (Vertex u : g_.neighbors(v)) {
                    if (!s.contains(u)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) {
                    return {std::nullopt,
                            {stage, "bottleneck vertex has no surviving neighbor"}};
                }
            }
        }
        notify(stage + 1, s, members);
    }
    if (members.size() < m_) {
        return {std::nullopt, {r_, "survivors below target"}};
    }
    return make_witness(s, members);
}

}  // namespace

ScatterResult find_scattered(const Graph& g, const VertexSet& w, int r, int m, int h,
                             const ScatterOptions& opts) {
    if (r < 0) throw std::invalid_argument("find_scattered: negative radius");
    if (m < 1) throw std::invalid_argument("find_scattered: m must be positive");
    if (h < 2) throw std::invalid_argument("find_scattered: h must be at least 2");
    for (Vertex v : w) g.check_vertex(v);
    Extractor ex(g, w, r, m, h, opts);
    return ex.run();
}

std::optional<ScatteredWitness> brute_force_scattered(const Graph& g, const VertexSet& w,
                                                      int r, int m, int s_max) {
    if (r < 0 || m < 1 || s_max < 0) {
        throw std::invalid_argument("brute_force_scattered: bad parameters");
    }
    for (Vertex v : w) g.check_vertex(v);
    const int n = g.vertex_count();
    if (n > 64) throw guard_error("brute_force_scattered: graph too large");
    if (n > 25 && s_max > 2) {
        throw guard_error("brute_force_scattered: refusing n > 25 with s_max > 2");
    }
    {
        // Crude count of bottleneck candidates; refuse obvious blowups.
        double combos = 0, term = 1;
        for (int t = 0; t <= s_max; ++t) {
            combos += term;
            term = term * (n - t) / (t + 1);
        }
        if (combos > 3e5) throw guard_error("brute_force_scattered: too many bottlenecks");
    }

    detail::ScratchBfs bfs(n);
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    // Lexicographically first independent set of size m in the conflict
    // graph (members within distance 2r of each other conflict).
    auto first_scattered = [&](const std::vector<char>& blocked) -> std::optional<VertexSet> {
        std::vector<Vertex> pool;
        for (Vertex v : w) {
            if (!blocked[v]) pool.push_back(v);
        }
        const int p = static_cast<int>(pool.size());
        if (p < m) return std::nullopt;
        std::vector<std::vector<char>> conflict(p, std::vector<char>(p, 0));
        for (int i = 0; i < p; ++i) {
            const auto& dist = bfs.run(g, pool[i], 2 * r, blocked);
            for (int j = 0; j < p; ++j) {
                if (j != i && dist[pool[j]] != -1) conflict[i][j] = 1;
            }
        }
        std::vector<int> chosen;
        std::uint64_t nodes = 0;
        auto rec = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(chosen.size()) == m) return true;
            if (++nodes > 20'000'000ULL) {
                throw guard_error("brute_force_scattered: search budget exceeded");
            }
            for (int i = from; i < p; ++i) {
                if (p - i < m - static_cast<int>(chosen.size())) return false;
                bool ok = true;
                for (int c : chosen) {
                    if (conflict[c][i]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                chosen.push_back(i);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!rec(rec, 0)) return std::nullopt;
        std::vector<Vertex> out;
        for (int c : chosen) out.push_back(pool[c]);
        return VertexSet(std::move(out));
    };

    std::vector<char> blocked(n, 0);
    std::vector<int> combo;
    auto try_combo = [&]() -> std::optional<ScatteredWitness> {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (int v : combo) blocked[v] = 1;
        auto a = first_scattered(blocked);
        if (!a) return std::nullopt;
        return ScatteredWitness{VertexSet(combo), std::move(*a), r, &g};
    };
    for (int size = 0; size <= std::min(s_max, n); ++size) {
        combo.assign(size, 0);
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            if (auto wit = try_combo()) return wit;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && combo[i] == n - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool shallow_clique_minor(const Graph& g, int h, int r) {
    if (h < 1 || r < 0) throw std::invalid_argument("shallow_clique_minor: bad parameters");
    const int n = g.vertex_count();
    if (n > 14) throw guard_error("shallow_clique_minor: graph too large");
    if (h > n) return false;
    if (h == 1) return n >= 1;

    using Mask = std::uint32_t;
    std::vector<Mask> neighbor_mask(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) neighbor_mask[v] |= Mask(1) << u;
    }
    std::vector<Mask> ball_mask(n, 0);
    detail::ScratchBfs bfs(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& dist = bfs.run(g, v, r, {});
        for (Vertex u = 0; u < n; ++u) {
            if (dist[u] != -1) ball_mask[v] |= Mask(1) << u;
        }
    }
    auto connected_mask = [&](Mask mask) {
        Mask start = mask & (~mask + 1);
        Mask seen = start;
        while (true) {
            Mask frontier = 0;
            Mask rest = seen;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                frontier |= neighbor_mask[v] & mask;
            }
            if ((frontier | seen) == seen) break;
            seen |= frontier;
        }
        return seen == mask;
    };

    // Candidate branch sets: connected, inside some radius-r ball.
    std::vector<Mask> candidates;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        bool in_ball = false;
        for (Vertex v = 0; v < n && !in_ball; ++v) {
            if ((mask & ~ball_mask[v]) == 0) in_ball = true;
        }
        if (!in_ball || !connected_mask(mask)) continue;
        candidates.push_back(mask);
    }
    // Canonical order: by minimum vertex, then by mask. Families are picked
    // with strictly increasing minima, which indexes each family once.
    std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
        int za = std::countr_zero(a), zb = std::countr_zero(b);
        return za != zb ? za < zb : a < b;
    });
    std::vector<Mask> candidate_nbrs;
    candidate_nbrs.reserve(candidates.size());
    for (Mask mask : candidates) {
        Mask nbrs = 0;
        Mask rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            nbrs |= neighbor_mask[v];
        }
        candidate_nbrs.push_back(nbrs & ~mask);
    }

    // Pick h pairwise disjoint, pairwise adjacent branch sets; canonical
    // order: strictly increasing minimum vertex.
    std::vector<int> picked;
    auto rec = [&](auto&& self, std::size_t from, Mask used) -> bool {
        if (static_cast<int>(picked.size()) == h) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            Mask c = candidates[i];
            if (c & used) continue;
            if (!picked.empty()) {
                int min_prev = std::countr_zero(candidates[picked.back()]);
                if (std::countr_zero(c) <= min_prev) continue;
            }
            bool adj = true;
            for (int p : picked) {
                if (!(candidate_nbrs[p] & c)) {
                    adj = false;
                    break;
                }
            }
            if (!adj) continue;
            picked.push_back(static_cast<int>(i));
            if (self(self, i + 1, used | c)) return true;
            picked.pop_back();
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace sparsedom
