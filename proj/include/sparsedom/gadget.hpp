#pragma once

#include <utility>
#include <vector>

#include "sparsedom/graph.hpp"

namespace sparsedom {

struct GadgetResult {
    Graph graph;                                    // total degree <= 4
    int original_vertices = 0;                      // ids below this are unchanged
    std::vector<std::pair<Vertex, Vertex>> terminals;
};

// Degree reduction for directed graphs: every vertex with in-degree above
// one gets a balanced binary in-tree (edges oriented toward it) whose leaves
// are its former in-neighbors, and symmetrically for out-degree. Original
// vertex ids are preserved, so terminal pairs carry over unchanged; the
// defining contract is that vertex-disjoint path instances keep their
// answer.
GadgetResult degree_reduction_gadget(const Graph& digraph,
                                     const std::vector<std::pair<Vertex, Vertex>>& terminals);

}  // namespace sparsedom
