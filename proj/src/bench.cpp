#include "sparsedom/bench.hpp"

#include <chrono>
#include <sstream>

#include "sparsedom/generators.hpp"
#include "sparsedom/variants.hpp"

namespace sparsedom {

std::vector<RunReport> bench(const std::vector<BenchItem>& corpus, const std::string& solver,
                             const ClassProfile& profile, const DriverOptions& opts,
                             std::uint64_t seed) {
    std::vector<RunReport> rows;
    int index = 0;
    for (const auto& item : corpus) {
        RunReport row;
        row.family = item.family;
        row.k = item.k;
        row.d = item.d;
        row.solver = solver;
        row.mode = opts.mode == ExtractionMode::paper_faithful ? "paper" : "practical";
        row.instance_id = item.family + "-" + std::to_string(index++);
        auto started = std::chrono::steady_clock::now();
        try {
            Graph g = generate(item.family, item.params, seed);
            row.n = g.vertex_count();
            auto inst = DominationInstance::make(g, item.k, item.d);
            SolveResult result;
            if (solver == "domset") {
                result = solve(inst, profile, opts);
            } else if (solver == "connected") {
                result = solve_connected_driver(inst, profile, opts);
            } else if (solver == "dconnected") {
                result = solve_d_connected_driver(inst, profile, opts);
            } else if (solver == "efficient") {
                result = solve_efficient(g, item.k, profile, opts);
            } else if (solver == "roman") {
                RomanOptions ropts;
                auto rr = solve_roman(g, item.k, ropts);
                result.answer = rr.answer;
                if (rr.labeling) {
                    std::vector<Vertex> twos;
                    for (Vertex v = 0; v < g.vertex_count(); ++v) {
                        if (rr.labeling->labels[v] == 2) twos.push_back(v);
                    }
                    result.solution = VertexSet(std::move(twos));
                }
            } else {
                throw std::invalid_argument("unknown solver '" + solver + "'");
            }
            row.answer = result.answer;
            row.trace = std::move(result.trace);
            // Never trust a Yes without re-checking the witness.
            if (result.answer == Answer::yes && result.solution && solver != "roman") {
                if (!dominates(g, *result.solution, inst.targets, item.d)) {
                    throw std::logic_error("bench: witness failed re-verification");
                }
                row.witness = std::move(result.solution);
            }
        } catch (const std::exception& e) {
            row.answer = Answer::inconclusive;
            row.instance_id += std::string(":error(") + e.what() + ")";
        }
        auto finished = std::chrono::steady_clock::now();
        row.wall_ms =
            std::chrono::duration_cast<std::chrono::microseconds>(finished - started).count() /
            1000.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const std::vector<RunReport>& rows) {
    std::ostringstream out;
    out << "family,n,k,d,answer,reductions,max_s,wall_ms\n";
    for (const auto& row : rows) {
        out << row.family << ',' << row.n << ',' << row.k << ',' << row.d << ','
            << answer_name(row.answer) << ',' << row.trace.size() << ',' << row.max_bottleneck()
            << ',' << row.wall_ms << '\n';
    }
    return out.str();
}

}  // namespace sparsedom
