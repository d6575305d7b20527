#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sparsedom/bounds.hpp"
#include "sparsedom/graph.hpp"

namespace sparsedom {

// Certificate that `scattered` is radius-`radius` scattered in host minus
// `bottleneck`. Every producer verifies the invariants before returning.
struct ScatteredWitness {
    VertexSet bottleneck;
    VertexSet scattered;
    int radius = 0;
    const Graph* host = nullptr;
};

struct ScatterFailure {
    int stage = 0;
    std::string reason;
};

// Per-stage snapshot exposed to observers (used by tests to check the
// stage invariants: survivors are stage-scattered once the bottleneck is
// removed, bottlenecks only grow, survivors only shrink).
struct ExtractionState {
    int stage = 0;
    VertexSet bottleneck;
    VertexSet survivors;
};

enum class ExtractionMode { paper_faithful, practical };

struct ScatterOptions {
    ExtractionMode mode = ExtractionMode::practical;
    // Practical pump rule: move a hub into the bottleneck when it covers
    // more than max(floor, |survivors| * num/den) of them.
    int pump_shrink_num = 1;
    int pump_shrink_den = 2;
    int pump_floor = 1;
    // At or below this vertex count the stage explores every useful pump
    // choice instead of a single greedy chain.
    int branch_vertex_limit = 20;
    // Check the near-vacuous bottleneck-adjacency stage condition (only
    // meaningful in paper-faithful mode).
    bool check_adjacency_condition = false;
    Saturating arith = Saturating();
    InnerColors reading = InnerColors::h_plus_one;
    std::function<void(const ExtractionState&)> observer;
};

struct ScatterResult {
    std::optional<ScatteredWitness> witness;
    ScatterFailure failure;
    bool ok() const { return witness.has_value(); }
};

// Stage-by-stage extraction of a bottleneck S (|S| <= h-2) and a subset A
// of w with |A| >= m that is r-scattered in g - S. Practical mode replaces
// the astronomical homogeneity thresholds with adaptive pumping and decides
// success by directly verifying the output, so a returned witness is always
// valid; paper-faithful mode additionally enforces the per-stage size
// conditions and fails honestly when they cannot hold at this scale.
ScatterResult find_scattered(const Graph& g, const VertexSet& w, int r, int m, int h,
                             const ScatterOptions& opts = {});

// Exhaustive search: bottlenecks by ascending size then lexicographic order,
// scattered sets by exact search over the conflict graph restricted to w.
// Guarded; intended for tiny graphs or tiny s_max.
std::optional<ScatteredWitness> brute_force_scattered(const Graph& g, const VertexSet& w,
                                                      int r, int m, int s_max);

// Exhaustive depth-r clique-minor test: true iff there are h pairwise
// disjoint connected branch sets, each inside some radius-r ball, with an
// edge between every pair. Guarded to n <= 14.
bool shallow_clique_minor(const Graph& g, int h, int r);

}  // namespace sparsedom
