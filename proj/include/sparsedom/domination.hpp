#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsedom/bounds.hpp"
#include "sparsedom/graph.hpp"
#include "sparsedom/wideness.hpp"

namespace sparsedom {

// One instance of target-set domination: find X within `candidates`,
// |X| <= budget, such that every target is within `radius` of some member.
struct DominationInstance {
    Graph graph;
    VertexSet targets;
    int budget = 0;
    int radius = 1;
    VertexSet candidates;

    static DominationInstance make(Graph g, int k, int d);
    static DominationInstance make(Graph g, VertexSet w, int k, int d);
    static DominationInstance make(Graph g, VertexSet w, int k, int d, VertexSet cands);

    void validate() const;
};

// Truncated distances from one vertex to each bottleneck vertex in order;
// entries are in [1, radius] or `radius + 1` meaning "farther than radius".
struct DistanceVector {
    std::vector<int> entries;
    int radius = 0;

    int far_marker() const { return radius + 1; }
    bool operator==(const DistanceVector& other) const = default;
    bool operator<(const DistanceVector& other) const { return entries < other.entries; }
};

// pre: a must not lie in the bottleneck. Distances are measured in g itself,
// not in g minus the bottleneck.
DistanceVector distance_vector(const Graph& g, Vertex a, const VertexSet& bottleneck, int d);

struct CoreOptions {
    int guard = 16;        // largest target set the partition core accepts
    bool exact_size = false;  // demand |X| == budget, padding when possible
};

// Exact solver for small target sets: enumerates partitions of the targets
// into at most `budget` blocks (restricted-growth order) and intersects the
// block members' balls. Refuses target sets above the guard.
std::optional<VertexSet> solve_small_core(const DominationInstance& inst,
                                          const CoreOptions& opts = {});

// Given a verified witness with radius == inst.radius and scattered set
// inside the targets of size at least (budget+2) * (radius+1)^|bottleneck|,
// returns a target whose removal provably preserves the answer.
Vertex reduce_witness(const DominationInstance& inst, const ScatteredWitness& witness);

enum class Answer { yes, no, inconclusive };

std::string answer_name(Answer a);

struct ReductionStep {
    Vertex removed;
    int bottleneck_size;
    int scattered_size;
};

struct SolveResult {
    Answer answer = Answer::inconclusive;
    std::optional<VertexSet> solution;
    std::vector<ReductionStep> trace;
    int remaining_targets = 0;
    std::string note;
};

struct OracleOptions {
    // Nominal feasibility check: C(|candidates|, k_max) must stay below this.
    double combination_budget = 1e22;
    // Hard cap on search nodes; exceeding it refuses rather than stalls.
    std::uint64_t node_budget = 100'000'000;
};

// Minimum-cardinality dominating set within k_max by branch search over the
// least-covered undominated target. Returns the deterministic first optimum,
// or nullopt when none exists within k_max. Guarded.
std::optional<VertexSet> brute_force_min_domset(const Graph& g, const VertexSet& w, int d,
                                                int k_max, const VertexSet& candidates,
                                                const OracleOptions& opts = {});

struct DriverOptions {
    ExtractionMode mode = ExtractionMode::practical;
    int guard_core = 16;
    int s_cap = 2;             // largest bottleneck size attempted per step
    bool exact_size = false;
    bool oracle_fallback = true;  // applies to the plain domination driver only
    int branch_vertex_limit = 20;
    OracleOptions oracle;
};

// Kernelization driver: shrink the target set one provably removable vertex
// at a time, then hand the small core to the exact solver. Practical mode
// justifies every removal by a directly verified witness, so its yes/no
// answers are always sound; when it can neither reduce nor finish it says so.
SolveResult solve(const DominationInstance& inst, const ClassProfile& profile,
                  const DriverOptions& opts = {});

namespace detail {

Vertex reduce_witness_impl(const Graph& g, const VertexSet& targets, int budget, int radius,
                           const ScatteredWitness& witness);

// Shared reduction loop, parameterized by the finishing solver so the
// connectivity and efficiency variants reuse identical kernelization.
using CoreSolver = std::function<std::optional<VertexSet>(const DominationInstance&,
                                                          const CoreOptions&)>;
using Fallback = std::function<std::optional<bool>(const DominationInstance&,
                                                   std::optional<VertexSet>&)>;

SolveResult run_reduction_driver(const DominationInstance& inst, const ClassProfile& profile,
                                 const DriverOptions& opts, const CoreSolver& core,
                                 const Fallback& fallback);

}  // namespace detail

}  // namespace sparsedom
