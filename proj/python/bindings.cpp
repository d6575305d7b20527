#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsedom/bench.hpp"
#include "sparsedom/gadget.hpp"
#include "sparsedom/generators.hpp"
#include "sparsedom/instance_io.hpp"
#include "sparsedom/variants.hpp"

namespace py = pybind11;
using namespace sparsedom;

namespace {

std::vector<int> set_to_list(const VertexSet& s) { return s.members(); }

VertexSet list_to_set(const std::vector<int>& ids) { return VertexSet(ids); }

py::object bound_to_py(const BigBound& b) {
    if (b.is_huge()) return py::none();
    return py::module_::import("builtins").attr("int")(b.to_string());
}

py::dict result_to_dict(const SolveResult& res) {
    py::dict out;
    out["answer"] = answer_name(res.answer);
    out["witness"] = res.solution ? py::cast(set_to_list(*res.solution)) : py::none();
    py::list trace;
    for (const auto& step : res.trace) {
        py::dict row;
        row["removed"] = step.removed;
        row["bottleneck"] = step.bottleneck_size;
        row["scattered"] = step.scattered_size;
        trace.append(row);
    }
    out["trace"] = trace;
    if (!res.note.empty()) out["note"] = res.note;
    return out;
}

DominationInstance make_instance(const Graph& g, int k, int d,
                                 std::optional<std::vector<int>> targets,
                                 std::optional<std::vector<int>> candidates) {
    VertexSet w = targets ? list_to_set(*targets) : VertexSet::full(g.vertex_count());
    VertexSet c = candidates ? list_to_set(*candidates) : VertexSet::full(g.vertex_count());
    return DominationInstance::make(g, std::move(w), k, d, std::move(c));
}

ClassProfile default_profile() {
    return profile_from_h([](int) { return 4; });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fixed-parameter domination algorithms for sparse graphs";

    py::register_exception<guard_error>(m, "GuardError");
    py::register_exception<parse_error>(m, "ParseError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, bool>(), py::arg("n"), py::arg("directed") = false)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors",
             [](const Graph& g, Vertex v) { return g.neighbors(v); })
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("directed", &Graph::directed)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("bfs_distances",
          [](const Graph& g, Vertex v, int cap) {
              return std::map<int, int>(bfs_distances(g, v, cap));
          },
          py::arg("graph"), py::arg("vertex"), py::arg("cap"));
    m.def("ball",
          [](const Graph& g, Vertex v, int d) { return set_to_list(ball(g, v, d)); });
    m.def("remove_vertices",
          [](const Graph& g, const std::vector<int>& s) {
              auto res = remove_vertices(g, list_to_set(s));
              return py::make_tuple(res.graph, res.old_to_new, res.new_to_old);
          });
    m.def("power", &power);
    m.def("is_scattered", [](const Graph& g, const std::vector<int>& a, int r) {
        return is_scattered(g, list_to_set(a), r);
    });
    m.def("dominates",
          [](const Graph& g, const std::vector<int>& x, const std::vector<int>& w, int d) {
              return dominates(g, list_to_set(x), list_to_set(w), d);
          });
    m.def("induces_connected", [](const Graph& g, const std::vector<int>& s) {
        return induces_connected(g, list_to_set(s));
    });

    m.def("ramsey_upper", [](int colors, int tuple_size, std::uint64_t target) {
        return bound_to_py(ramsey_upper(colors, tuple_size, target));
    });
    m.def("n_threshold", [](int h, int r, std::uint64_t m_) {
        return bound_to_py(n_threshold(h, r, m_));
    });

    m.def(
        "find_scattered",
        [](const Graph& g, const std::vector<int>& w, int r, int m_, int h) -> py::object {
            auto res = find_scattered(g, list_to_set(w), r, m_, h);
            if (!res.ok()) return py::none();
            py::dict out;
            out["bottleneck"] = set_to_list(res.witness->bottleneck);
            out["scattered"] = set_to_list(res.witness->scattered);
            out["radius"] = res.witness->radius;
            return out;
        },
        py::arg("graph"), py::arg("targets"), py::arg("r"), py::arg("m"), py::arg("h"));
    m.def("brute_force_scattered",
          [](const Graph& g, const std::vector<int>& w, int r, int m_,
             int s_max) -> py::object {
              auto wit = brute_force_scattered(g, list_to_set(w), r, m_, s_max);
              if (!wit) return py::none();
              py::dict out;
              out["bottleneck"] = set_to_list(wit->bottleneck);
              out["scattered"] = set_to_list(wit->scattered);
              return out;
          });
    m.def("shallow_clique_minor", &shallow_clique_minor);

    m.def(
        "solve_domset",
        [](const Graph& g, int k, int d, std::optional<std::vector<int>> targets,
           std::optional<std::vector<int>> candidates, int guard_core) {
            DriverOptions opts;
            opts.guard_core = guard_core;
            return result_to_dict(
                solve(make_instance(g, k, d, std::move(targets), std::move(candidates)),
                      default_profile(), opts));
        },
        py::arg("graph"), py::arg("k"), py::arg("d") = 1, py::arg("targets") = py::none(),
        py::arg("candidates") = py::none(), py::arg("guard_core") = 16);
    m.def(
        "brute_force_min_domset",
        [](const Graph& g, int k_max, int d, std::optional<std::vector<int>> targets,
           std::optional<std::vector<int>> candidates) -> py::object {
            VertexSet w = targets ? list_to_set(*targets) : VertexSet::full(g.vertex_count());
            VertexSet c =
                candidates ? list_to_set(*candidates) : VertexSet::full(g.vertex_count());
            auto x = brute_force_min_domset(g, w, d, k_max, c);
            if (!x) return py::none();
            return py::cast(set_to_list(*x));
        },
        py::arg("graph"), py::arg("k_max"), py::arg("d") = 1, py::arg("targets") = py::none(),
        py::arg("candidates") = py::none());
    m.def(
        "solve_connected",
        [](const Graph& g, int k, int d) {
            return result_to_dict(
                solve_connected_driver(DominationInstance::make(g, k, d), default_profile()));
        },
        py::arg("graph"), py::arg("k"), py::arg("d") = 1);
    m.def(
        "solve_d_connected",
        [](const Graph& g, int k, int d) {
            return result_to_dict(solve_d_connected_driver(DominationInstance::make(g, k, d),
                                                           default_profile()));
        },
        py::arg("graph"), py::arg("k"), py::arg("d") = 1);
    m.def(
        "solve_efficient",
        [](const Graph& g, int k) {
            return result_to_dict(solve_efficient(g, k, default_profile()));
        },
        py::arg("graph"), py::arg("k"));
    m.def(
        "solve_roman",
        [](const Graph& g, int k) {
            auto res = solve_roman(g, k);
            py::dict out;
            out["answer"] = answer_name(res.answer);
            out["labels"] = res.labeling ? py::cast(res.labeling->labels) : py::none();
            if (res.labeling) out["weight"] = res.labeling->weight();
            return out;
        },
        py::arg("graph"), py::arg("k"));

    m.def("reduce_step",
          [](const Graph& g, const std::vector<int>& w, int k, int d,
             const std::vector<int>& bottleneck, const std::vector<int>& scattered) {
              auto inst = DominationInstance::make(g, list_to_set(w), k, d);
              ScatteredWitness wit{list_to_set(bottleneck), list_to_set(scattered), d,
                                   &inst.graph};
              return reduce_witness(inst, wit);
          });

    m.def("enumerate_trees", [](int k) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& t : enumerate_trees(k)) out.push_back(t.edges);
        return out;
    });
    m.def("select_connected",
          [](const Graph& g, const std::vector<std::vector<int>>& groups) -> py::object {
              std::vector<VertexSet> sets;
              for (const auto& grp : groups) sets.push_back(list_to_set(grp));
              auto sel = select_connected(g, sets);
              if (!sel) return py::none();
              return py::cast(set_to_list(*sel));
          });

    m.def("generate", &generate, py::arg("family"), py::arg("params"), py::arg("seed") = 1);
    m.def("parse_instance", [](const std::string& text) {
        auto data = parse_instance(text);
        py::dict out;
        out["kind"] = data.kind;
        out["graph"] = data.graph;
        out["k"] = data.budget ? py::cast(*data.budget) : py::none();
        out["d"] = data.radius ? py::cast(*data.radius) : py::none();
        out["targets"] = set_to_list(data.effective_targets());
        out["candidates"] = set_to_list(data.effective_candidates());
        return out;
    });
    m.def("emit_instance",
          [](const Graph& g, const std::string& kind, std::optional<int> k,
             std::optional<int> d) {
              InstanceData data;
              data.kind = kind;
              data.graph = g;
              data.budget = k;
              data.radius = d;
              return emit_instance(data);
          },
          py::arg("graph"), py::arg("kind") = "ds", py::arg("k") = py::none(),
          py::arg("d") = py::none());

    m.def("degree_reduction_gadget",
          [](const Graph& dg, const std::vector<std::pair<int, int>>& terminals) {
              auto res = degree_reduction_gadget(dg, terminals);
              return py::make_tuple(res.graph, res.original_vertices, res.terminals);
          });
}
