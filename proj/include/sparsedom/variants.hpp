#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sparsedom/domination.hpp"

namespace sparsedom {

// Labeled tree on vertices 1..size.
struct AbstractTree {
    int size = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const AbstractTree& other) const = default;
};

// All labeled trees on k vertices, one per Pruefer sequence, in
// lexicographic sequence order. Guarded (default k <= 8).
std::vector<AbstractTree> enumerate_trees(int k, int guard = 8);

// Given pairwise-disjoint groups, pick one vertex per group so the picks
// induce a connected subgraph of g; tree shapes are tried in enumeration
// order, candidate sets are pruned to arc consistency, and the extracted
// selection is verified before being returned.
std::optional<VertexSet> select_connected(const Graph& g,
                                          const std::vector<VertexSet>& groups);

// Exact small-core solver for connected domination: partition the targets,
// intersect block balls, and search for a connected system of
// representatives (plus free connector slots when the targets do not span
// the whole graph).
std::optional<VertexSet> solve_connected(const DominationInstance& inst,
                                         const CoreOptions& opts = {});

SolveResult solve_connected_driver(const DominationInstance& inst, const ClassProfile& profile,
                                   const DriverOptions& opts = {});

// Same as solve_connected, but connectivity is evaluated in the d-th power
// of the graph while domination stays in the graph itself.
std::optional<VertexSet> solve_d_connected(const DominationInstance& inst,
                                           const CoreOptions& opts = {});

SolveResult solve_d_connected_driver(const DominationInstance& inst,
                                     const ClassProfile& profile,
                                     const DriverOptions& opts = {});

// Dominating set of exactly k vertices whose members are pairwise at
// distance at least 3 (disjoint closed neighborhoods).
SolveResult solve_efficient(const Graph& g, int k, const ClassProfile& profile,
                            const DriverOptions& opts = {});

struct RomanLabeling {
    std::vector<int> labels;  // one of {0, 1, 2} per vertex

    int weight() const;
    bool valid(const Graph& g) const;
};

struct RomanResult {
    Answer answer = Answer::inconclusive;
    std::optional<RomanLabeling> labeling;
    std::string note;
};

struct RomanOptions {
    int s_cap = 2;
    int base_vertex_limit = 24;    // brute-force directly at or below
    double base_budget = 2e6;      // support combinations allowed in the base
    int branch_vertex_limit = 20;
};

// Weight-k Roman domination by scattered-set branching: a large 2-scattered
// set among the unsatisfied vertices forces a 2-label inside the bottleneck,
// which bounds the branching width by the bottleneck size.
RomanResult solve_roman(const Graph& g, int k, const RomanOptions& opts = {});

}  // namespace sparsedom
