#include "sparsedom/domination.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace sparsedom {

DominationInstance DominationInstance::make(Graph g, int k, int d) {
    int n = g.vertex_count();
    return make(std::move(g), VertexSet::full(n), k, d);
}

DominationInstance DominationInstance::make(Graph g, VertexSet w, int k, int d) {
    int n = g.vertex_count();
    return make(std::move(g), std::move(w), k, d, VertexSet::full(n));
}

DominationInstance DominationInstance::make(Graph g, VertexSet w, int k, int d,
                                            VertexSet cands) {
    DominationInstance inst{std::move(g), std::move(w), k, d, std::move(cands)};
    inst.validate();
    return inst;
}

void DominationInstance::validate() const {
    if (budget < 0) throw std::invalid_argument("instance: negative budget");
    if (radius < 0) throw std::invalid_argument("instance: negative radius");
    for (Vertex v : targets) graph.check_vertex(v);
    for (Vertex v : candidates) graph.check_vertex(v);
}

DistanceVector distance_vector(const Graph& g, Vertex a, const VertexSet& bottleneck, int d) {
    if (d < 1) throw std::invalid_argument("distance_vector: radius must be positive");
    g.check_vertex(a);
    if (bottleneck.contains(a)) {
        throw std::invalid_argument("distance_vector: vertex lies in the bottleneck");
    }
    DistanceVector vec;
    vec.radius = d;
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> touched;
    detail::truncated_bfs(g, a, d, {}, dist, touched);
    for (Vertex t : bottleneck) {
        vec.entries.push_back(dist[t] == -1 ? d + 1 : dist[t]);
    }
    return vec;
}

namespace {

// Fixed-width bitset over vertex ids.
class Bits {
public:
    explicit Bits(int n = 0) : n_(n), words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    Bits& operator&=(const Bits& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    int lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(static_cast<int>(w * 64) + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    Bits and_not(const Bits& o) const {
        Bits r(n_);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & ~o.words_[w];
        return r;
    }

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

Bits ball_bits(const Graph& g, Vertex v, int d, detail::ScratchBfs& bfs) {
    Bits b(g.vertex_count());
    const auto& dist = bfs.run(g, v, d, {});
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (dist[u] != -1) b.set(u);
    }
    return b;
}

}  // namespace

std::optional<VertexSet> solve_small_core(const DominationInstance& inst,
                                          const CoreOptions& opts) {
    inst.validate();
    const auto& g = inst.graph;
    const auto& w = inst.targets;
    const int k = inst.budget;
    if (w.size() > opts.guard) {
        throw guard_error("solve_small_core: target set exceeds the guard (" +
                          std::to_string(opts.guard) + "); use the kernelization driver");
    }
    auto finish = [&](VertexSet x) -> std::optional<VertexSet> {
        if (opts.exact_size) {
            for (Vertex c : inst.candidates) {
                if (x.size() >= k) break;
                x.insert(c);
            }
            if (x.size() != k) return std::nullopt;
        }
        if (!dominates(g, x, w, inst.radius) || x.size() > k || !is_subset(x, inst.candidates)) {
            throw std::logic_error("solve_small_core produced an invalid solution");
        }
        return x;
    };
    if (w.empty()) return finish({});
    if (k == 0) return std::nullopt;

    detail::ScratchBfs bfs(g.vertex_count());
    Bits cand_bits(g.vertex_count());
    for (Vertex c : inst.candidates) cand_bits.set(c);
    std::vector<Bits> balls;
    balls.reserve(w.size());
    for (Vertex v : w) {
        Bits b = ball_bits(g, v, inst.radius, bfs);
        b &= cand_bits;
        balls.push_back(std::move(b));
    }

    // Restricted-growth enumeration with running block intersections; a
    // branch dies as soon as one block's intersection empties, which keeps
    // the first completed partition the first feasible one in RGS order.
    const int nw = w.size();
    std::vector<Bits> blocks;
    std::optional<VertexSet> found;
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == nw) {
            std::vector<Vertex> mins;
            for (const auto& b : blocks) mins.push_back(b.lowest());
            found = finish(VertexSet(std::move(mins)));
            return found.has_value();
        }
        int used = static_cast<int>(blocks.size());
        for (int b = 0; b < used; ++b) {
            Bits merged = blocks[b];
            merged &= balls[idx];
            if (!merged.any()) continue;
            Bits saved = std::move(blocks[b]);
            blocks[b] = std::move(merged);
            if (self(self, idx + 1)) return true;
            blocks[b] = std::move(saved);
        }
        if (used < k) {
            if (balls[idx].any()) {
                blocks.push_back(balls[idx]);
                if (self(self, idx + 1)) return true;
                blocks.pop_back();
            }
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

namespace detail {

Vertex reduce_witness_impl(const Graph& g, const VertexSet& targets, int budget, int radius,
                           const ScatteredWitness& witness) {
    if (witness.host != nullptr && witness.host != &g) {
        throw std::invalid_argument("reduce_witness: witness belongs to another graph");
    }
    if (witness.radius != radius) {
        throw std::invalid_argument("reduce_witness: witness radius differs from the instance");
    }
    if (!is_subset(witness.scattered, targets)) {
        throw std::invalid_argument("reduce_witness: scattered set not inside the targets");
    }
    const int d = radius;
    const int s = witness.bottleneck.size();
    // Required size (budget+2) * (d+1)^s, computed saturating.
    Saturating sat;
    BigBound need = sat.mul(BigBound(static_cast<std::uint64_t>(budget) + 2),
                            sat.pow(BigBound(static_cast<std::uint64_t>(d) + 1),
                                    static_cast<std::uint64_t>(s)));
    if (BigBound(static_cast<std::uint64_t>(witness.scattered.size())) < need) {
        throw std::invalid_argument("reduce_witness: scattered set too small for the budget");
    }

    // One truncated search per bottleneck vertex fills every member's vector.
    detail::ScratchBfs bfs(g.vertex_count());
    const auto& members = witness.scattered.members();
    std::vector<std::vector<int>> vectors(members.size());
    const int far = d + 1;
    for (auto& v : vectors) v.reserve(s);
    for (Vertex t : witness.bottleneck) {
        const auto& dist = bfs.run(g, t, d, {});
        for (std::size_t i = 0; i < members.size(); ++i) {
            int x = dist[members[i]];
            vectors[i].push_back(x == -1 ? far : x);
        }
    }
    std::map<std::vector<int>, std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < members.size(); ++i) {
        classes[vectors[i]].push_back(members[i]);
    }
    for (const auto& [vec, cls] : classes) {
        if (static_cast<int>(cls.size()) >= budget + 2) return cls.front();
    }
    throw std::logic_error("reduce_witness: pigeonhole class missing");
}

}  // namespace detail

Vertex reduce_witness(const DominationInstance& inst, const ScatteredWitness& witness) {
    inst.validate();
    if (witness.host != nullptr && witness.host != &inst.graph) {
        throw std::invalid_argument("reduce_witness: witness belongs to another graph");
    }
    return detail::reduce_witness_impl(inst.graph, inst.targets, inst.budget, inst.radius,
                                       witness);
}

std::string answer_name(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        default: return "inconclusive";
    }
}

std::optional<VertexSet> brute_force_min_domset(const Graph& g, const VertexSet& w, int d,
                                                int k_max, const VertexSet& candidates,
                                                const OracleOptions& opts) {
    if (d < 0) throw std::invalid_argument("brute_force_min_domset: negative radius");
    if (k_max < 0) throw std::invalid_argument("brute_force_min_domset: negative budget");
    for (Vertex v : w) g.check_vertex(v);
    for (Vertex v : candidates) g.check_vertex(v);
    {
        double combos = 1, term = 1;
        const int n = candidates.size();
        for (int t = 1; t <= std::min(k_max, n); ++t) {
            term = term * (n - t + 1) / t;
            combos += term;
        }
        if (combos > opts.combination_budget) {
            throw guard_error("brute_force_min_domset: combination budget exceeded");
        }
    }
    if (w.empty()) return VertexSet{};

    const int n = g.vertex_count();
    detail::ScratchBfs bfs(n);
    const auto& cands = candidates.members();
    const int nc = static_cast<int>(cands.size());

    // Target-indexed bitsets: cover[c] = targets covered by candidate c;
    // coverers[t] = candidates covering target t.
    const auto& targets = w.members();
    const int nt = static_cast<int>(targets.size());
    std::vector<int> target_index(n, -1);
    for (int i = 0; i < nt; ++i) target_index[targets[i]] = i;
    std::vector<Bits> cover(nc, Bits(nt));
    std::vector<std::vector<int>> coverers(nt);
    int max_cover = 0;
    for (int c = 0; c < nc; ++c) {
        const auto& dist = bfs.run(g, cands[c], d, {});
        int covered = 0;
        for (int t = 0; t < nt; ++t) {
            if (dist[targets[t]] != -1) {
                cover[c].set(t);
                coverers[t].push_back(c);
                ++covered;
            }
        }
        max_cover = std::max(max_cover, covered);
    }
    for (int t = 0; t < nt; ++t) {
        if (coverers[t].empty()) return std::nullopt;
    }

    Bits all(nt);
    for (int t = 0; t < nt; ++t) all.set(t);

    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, const Bits& undominated, int remaining) -> bool {
        if (!undominated.any()) return true;
        if (remaining == 0) return false;
        if (++nodes > opts.node_budget) {
            throw guard_error("brute_force_min_domset: node budget exceeded");
        }
        int need = (undominated.count() + max_cover - 1) / max_cover;
        if (need > remaining) return false;
        // Pivot: least-coverable undominated target.
        int pivot = -1;
        undominated.for_each([&](int t) {
            if (pivot == -1 ||
                coverers[t].size() < coverers[pivot].size()) {
                pivot = t;
            }
        });
        // Branch candidates by live coverage, descending, ties by id.
        std::vector<std::pair<int, int>> ranked;
        for (int c : coverers[pivot]) {
            Bits live = cover[c];
            live &= undominated;
            ranked.emplace_back(-live.count(), c);
        }
        std::sort(ranked.begin(), ranked.end());
        for (auto& [neg, c] : ranked) {
            chosen.push_back(c);
            if (self(self, undominated.and_not(cover[c]), remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int size = 0; size <= k_max; ++size) {
        chosen.clear();
        if (rec(rec, all, size)) {
            std::vector<Vertex> out;
            for (int c : chosen) out.push_back(cands[c]);
            VertexSet x(std::move(out));
            if (!dominates(g, x, w, d)) {
                throw std::logic_error("brute_force_min_domset produced a bad cover");
            }
            return x;
        }
    }
    return std::nullopt;
}

namespace detail {

SolveResult run_reduction_driver(const DominationInstance& inst, const ClassProfile& profile,
                                 const DriverOptions& opts, const CoreSolver& core,
                                 const Fallback& fallback) {
    inst.validate();
    const auto& g = inst.graph;
    const int k = inst.budget;
    const int d = inst.radius;
    SolveResult result;
    VertexSet w_cur = inst.targets;
    Saturating sat;

    auto finish_with_core = [&](const VertexSet& w_now) -> SolveResult {
        DominationInstance small{g, w_now, k, d, inst.candidates};
        CoreOptions core_opts;
        core_opts.guard = opts.guard_core;
        core_opts.exact_size = opts.exact_size;
        result.remaining_targets = w_now.size();
        try {
            auto x = core(small, core_opts);
            if (x) {
                result.answer = Answer::yes;
                result.solution = std::move(x);
            } else {
                result.answer = Answer::no;
            }
        } catch (const guard_error& e) {
            result.answer = Answer::inconclusive;
            result.note = e.what();
        }
        return result;
    };

    if (opts.mode == ExtractionMode::paper_faithful) {
        const int s = profile.margin(d);
        BigBound m_needed = sat.mul(BigBound(static_cast<std::uint64_t>(k) + 2),
                                    sat.pow(BigBound(static_cast<std::uint64_t>(d) + 1),
                                            static_cast<std::uint64_t>(s)));
        BigBound big_n = m_needed.is_huge() ? BigBound::huge() : profile.threshold(d, m_needed);
        while (BigBound(static_cast<std::uint64_t>(w_cur.size())) > big_n) {
            if (m_needed > BigBound(static_cast<std::uint64_t>(w_cur.size()))) {
                result.answer = Answer::inconclusive;
                result.remaining_targets = w_cur.size();
                result.note = "required scattered size exceeds the target set";
                return result;
            }
            ScatterOptions sopts;
            sopts.mode = ExtractionMode::paper_faithful;
            auto fs = find_scattered(g, w_cur, d, static_cast<int>(m_needed.as_u64()),
                                     profile.clique_bound(d), sopts);
            if (!fs.ok()) {
                result.answer = Answer::inconclusive;
                result.remaining_targets = w_cur.size();
                result.note = "scattered-set extraction failed: " + fs.failure.reason;
                return result;
            }
            if (fs.witness->bottleneck.size() > s) {
                // The class promised a smaller bottleneck; the instance is
                // outside the profile rather than reducible.
                result.answer = Answer::inconclusive;
                result.remaining_targets = w_cur.size();
                result.note = "bottleneck exceeds the class margin";
                return result;
            }
            Vertex removed = reduce_witness_impl(g, w_cur, k, d, *fs.witness);
            result.trace.push_back(
                {removed, fs.witness->bottleneck.size(), fs.witness->scattered.size()});
            w_cur.erase(removed);
        }
        if (w_cur.size() > opts.guard_core) {
            result.answer = Answer::inconclusive;
            result.remaining_targets = w_cur.size();
            result.note = "kernel within the class threshold but beyond the core guard";
            return result;
        }
        return finish_with_core(w_cur);
    }

    // Practical mode: escalate the permitted bottleneck size until some
    // verified witness justifies a removal; every removal is sound on its
    // own, so partial progress never corrupts the answer.
    while (w_cur.size() > opts.guard_core) {
        bool progressed = false;
        for (int s_try = 0; s_try <= opts.s_cap && !progressed; ++s_try) {
            BigBound m_b = sat.mul(BigBound(static_cast<std::uint64_t>(k) + 2),
                                   sat.pow(BigBound(static_cast<std::uint64_t>(d) + 1),
                                           static_cast<std::uint64_t>(s_try)));
            if (m_b.is_huge() ||
                m_b > BigBound(static_cast<std::uint64_t>(w_cur.size()))) {
                continue;
            }
            const int m = static_cast<int>(m_b.as_u64());
            ScatterOptions sopts;
            sopts.branch_vertex_limit = opts.branch_vertex_limit;
            auto fs = find_scattered(g, w_cur, d, m, s_try + 2, sopts);
            if (!fs.ok()) continue;
            Vertex removed = reduce_witness_impl(g, w_cur, k, d, *fs.witness);
            result.trace.push_back(
                {removed, fs.witness->bottleneck.size(), fs.witness->scattered.size()});
            w_cur.erase(removed);
            progressed = true;
        }
        if (!progressed) break;
    }
    if (w_cur.size() <= opts.guard_core) {
        return finish_with_core(w_cur);
    }
    result.remaining_targets = w_cur.size();
    if (fallback) {
        DominationInstance residual{g, w_cur, k, d, inst.candidates};
        try {
            std::optional<VertexSet> x;
            auto verdict = fallback(residual, x);
            if (verdict.has_value()) {
                result.answer = *verdict ? Answer::yes : Answer::no;
                result.solution = std::move(x);
                return result;
            }
        } catch (const guard_error& e) {
            result.note = e.what();
        }
    }
    result.answer = Answer::inconclusive;
    if (result.note.empty()) {
        result.note = "no reducible witness and the residual kernel is beyond the guards";
    }
    return result;
}

}  // namespace detail

SolveResult solve(const DominationInstance& inst, const ClassProfile& profile,
                  const DriverOptions& opts) {
    detail::Fallback fallback;
    if (opts.oracle_fallback) {
        fallback = [&opts](const DominationInstance& residual,
                           std::optional<VertexSet>& x) -> std::optional<bool> {
            auto found = brute_force_min_domset(residual.graph, residual.targets,
                                                residual.radius, residual.budget,
                                                residual.candidates, opts.oracle);
            if (found) {
                x = std::move(found);
                return true;
            }
            return false;
        };
    }
    auto result = detail::run_reduction_driver(
        inst, profile, opts,
        [](const DominationInstance& small, const CoreOptions& copts) {
            return solve_small_core(small, copts);
        },
        fallback);
    if (result.answer == Answer::yes) {
        const auto& x = *result.solution;
        if (!dominates(inst.graph, x, inst.targets, inst.radius) || x.size() > inst.budget ||
            !is_subset(x, inst.candidates)) {
            throw std::logic_error("solve produced an invalid solution");
        }
    }
    return result;
}

}  // namespace sparsedom
