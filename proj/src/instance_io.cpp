#include "sparsedom/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace sparsedom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw parse_error(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

VertexSet parse_vertex_list(const std::vector<std::string_view>& toks, int n, int line) {
    std::vector<Vertex> ids;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        int v = parse_int(toks[i], line, "vertex");
        if (v < 0 || v >= n) {
            throw parse_error(line, "vertex " + std::to_string(v) + " out of range");
        }
        ids.push_back(v);
    }
    return VertexSet(std::move(ids));
}

}  // namespace

InstanceData parse_instance(std::string_view text) {
    InstanceData inst;
    bool have_header = false;
    int declared_edges = 0;
    int seen_edges = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw parse_error(line_no, "duplicate header");
            if (toks.size() != 4) throw parse_error(line_no, "header needs: p <kind> <n> <m>");
            inst.kind = std::string(toks[1]);
            int n = parse_int(toks[2], line_no, "vertex count");
            declared_edges = parse_int(toks[3], line_no, "edge count");
            if (n < 0 || declared_edges < 0) throw parse_error(line_no, "negative size");
            inst.graph = Graph(n);
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error(line_no, "expected header before this line");
        const int n = inst.graph.vertex_count();
        if (toks[0] == "k" || toks[0] == "d") {
            if (toks.size() != 2) {
                throw parse_error(line_no, std::string(toks[0]) + " needs one integer");
            }
            int value = parse_int(toks[1], line_no, "parameter");
            if (value < 0) throw parse_error(line_no, "negative parameter");
            auto& slot = toks[0] == "k" ? inst.budget : inst.radius;
            if (slot) throw parse_error(line_no, std::string("duplicate ") + std::string(toks[0]));
            slot = value;
            continue;
        }
        if (toks[0] == "w") {
            if (inst.targets) throw parse_error(line_no, "duplicate w line");
            inst.targets = parse_vertex_list(toks, n, line_no);
            continue;
        }
        if (toks[0] == "red") {
            if (inst.candidates) throw parse_error(line_no, "duplicate red line");
            inst.candidates = parse_vertex_list(toks, n, line_no);
            continue;
        }
        if (toks.size() != 2) throw parse_error(line_no, "expected an edge '<u> <v>'");
        int u = parse_int(toks[0], line_no, "vertex");
        int v = parse_int(toks[1], line_no, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw parse_error(line_no, "edge endpoint out of range");
        }
        try {
            inst.graph.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw parse_error(line_no, e.what());
        }
        ++seen_edges;
    }
    if (!have_header) throw parse_error(1, "missing header");
    if (seen_edges != declared_edges) {
        throw parse_error(line_no,
                          "header declared " + std::to_string(declared_edges) + " edges, got " +
                              std::to_string(seen_edges));
    }
    return inst;
}

std::string emit_instance(const InstanceData& inst) {
    std::ostringstream out;
    out << "p " << inst.kind << ' ' << inst.graph.vertex_count() << ' '
        << inst.graph.edge_count() << '\n';
    if (inst.budget) out << "k " << *inst.budget << '\n';
    if (inst.radius) out << "d " << *inst.radius << '\n';
    for (const auto& [u, v] : inst.graph.edges()) {
        out << u << ' ' << v << '\n';
    }
    if (inst.targets) {
        out << 'w';
        for (Vertex v : *inst.targets) out << ' ' << v;
        out << '\n';
    }
    if (inst.candidates) {
        out << "red";
        for (Vertex v : *inst.candidates) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace sparsedom
