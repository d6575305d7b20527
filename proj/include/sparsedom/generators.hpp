#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsedom/graph.hpp"

namespace sparsedom {

Graph make_path(int n);
Graph make_cycle(int n);
// Star with `leaves` leaves; the center is vertex 0.
Graph make_star(int leaves);
Graph make_grid(int rows, int cols);
// Connected graph with maximum degree at most max_deg: a degree-capped
// random attachment tree plus `extra_edges` randomly drawn edges accepted
// under rejection of degree or multiplicity violations.
Graph make_random_max_deg(int n, int max_deg, int extra_edges, std::uint64_t seed);
// Clique on n vertices with every edge subdivided `t` times.
Graph make_subdivided_clique(int n, int t);
Graph make_random_tree(int n, std::uint64_t seed);

// Name-based dispatcher for the CLI: family in {path, cycle, star, grid,
// random_max_deg, subdivided_clique, random_tree}, numeric params as listed
// above (seeded families take the seed separately).
Graph generate(const std::string& family, const std::vector<long>& params,
               std::uint64_t seed);

}  // namespace sparsedom
