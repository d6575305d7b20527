#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sparsedom/graph.hpp"

namespace sparsedom {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Plain-text instance. Grammar:
//   c <comment>
//   p <kind> <n> <m>
//   k <int>
//   d <int>
//   w <v1> <v2> ...
//   red <v1> <v2> ...
//   <u> <v>            (edge, exactly m of them)
struct InstanceData {
    std::string kind = "ds";
    Graph graph;
    std::optional<int> budget;
    std::optional<int> radius;
    std::optional<VertexSet> targets;     // default: every vertex
    std::optional<VertexSet> candidates;  // default: every vertex

    VertexSet effective_targets() const {
        return targets ? *targets : VertexSet::full(graph.vertex_count());
    }
    VertexSet effective_candidates() const {
        return candidates ? *candidates : VertexSet::full(graph.vertex_count());
    }
};

InstanceData parse_instance(std::string_view text);

// Canonical form: header, k, d, sorted edges, w, red. parse followed by
// emit is the identity on canonical text modulo comments.
std::string emit_instance(const InstanceData& inst);

}  // namespace sparsedom
