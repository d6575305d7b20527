#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparsedom/bench.hpp"
#include "sparsedom/generators.hpp"
#include "sparsedom/instance_io.hpp"
#include "sparsedom/variants.hpp"

using nlohmann::json;
using namespace sparsedom;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

struct CommonFlags {
    std::string file;
    std::string mode = "practical";
    std::string profile = "auto";
    std::uint64_t seed = 1;
    bool json_out = false;
    int guard_core = 16;
    int s_cap = 2;
    bool exact_k = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool reads_instance = true) {
    if (reads_instance) {
        cmd->add_option("--file", flags.file, "instance file (default: stdin)");
    }
    cmd->add_option("--mode", flags.mode, "paper or practical")
        ->check(CLI::IsMember({"paper", "practical"}));
    cmd->add_option("--profile", flags.profile,
                    "class profile: auto, bdeg<D> (max degree D), excl<H> (clique bound H)");
    cmd->add_option("--seed", flags.seed, "generator seed");
    cmd->add_flag("--json", flags.json_out, "structured output");
    cmd->add_option("--guard-core", flags.guard_core, "small-core target cap");
    cmd->add_option("--s-cap", flags.s_cap, "largest bottleneck size attempted per reduction");
    cmd->add_flag("--exact-k", flags.exact_k, "demand exactly k vertices");
}

int env_guard_default() {
    if (const char* env = std::getenv("SPARSE_DOMSET_GUARD")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw std::invalid_argument("SPARSE_DOMSET_GUARD is not an integer");
        }
    }
    return 16;
}

std::string read_input(const CommonFlags& flags) {
    if (flags.file.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(flags.file);
    if (!in) throw std::invalid_argument("cannot open '" + flags.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ClassProfile resolve_profile(const CommonFlags& flags) {
    ProfileMode pmode = flags.mode == "paper" ? ProfileMode::paper_faithful
                                              : ProfileMode::practical_safe;
    const std::string& name = flags.profile;
    if (name == "auto") {
        return profile_from_h([cap = flags.s_cap](int) { return cap + 2; });
    }
    if (name.rfind("bdeg", 0) == 0) {
        return profile_bounded_degree(std::stoi(name.substr(4)), pmode);
    }
    if (name.rfind("excl", 0) == 0) {
        int h = std::stoi(name.substr(4));
        return profile_from_h([h](int) { return h; });
    }
    throw std::invalid_argument("unknown profile '" + name + "'");
}

DriverOptions resolve_driver(const CommonFlags& flags) {
    DriverOptions opts;
    opts.mode = flags.mode == "paper" ? ExtractionMode::paper_faithful
                                      : ExtractionMode::practical;
    opts.guard_core = flags.guard_core;
    opts.s_cap = flags.s_cap;
    opts.exact_size = flags.exact_k;
    // Profiles with a known margin bound the useful ladder height.
    if (flags.profile.rfind("bdeg", 0) == 0) opts.s_cap = 0;
    return opts;
}

json set_to_json(const VertexSet& s) {
    json arr = json::array();
    for (Vertex v : s) arr.push_back(v);
    return arr;
}

json trace_to_json(const std::vector<ReductionStep>& trace) {
    json arr = json::array();
    for (const auto& step : trace) {
        arr.push_back({{"removed", step.removed},
                       {"bottleneck", step.bottleneck_size},
                       {"scattered", step.scattered_size}});
    }
    return arr;
}

int emit_solve_result(const CommonFlags& flags, const SolveResult& result) {
    if (flags.json_out) {
        json out{{"answer", answer_name(result.answer)},
                 {"witness", result.solution ? set_to_json(*result.solution) : json(nullptr)},
                 {"trace", trace_to_json(result.trace)}};
        if (!result.note.empty()) out["note"] = result.note;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "answer: " << answer_name(result.answer) << "\n";
        if (result.solution) {
            std::cout << "witness:";
            for (Vertex v : *result.solution) std::cout << ' ' << v;
            std::cout << "\n";
        }
        std::cout << "reductions: " << result.trace.size() << "\n";
        if (!result.note.empty()) std::cout << "note: " << result.note << "\n";
    }
    switch (result.answer) {
        case Answer::yes: return kExitYes;
        case Answer::no: return kExitNo;
        default: return kExitInconclusive;
    }
}

struct InstanceParams {
    DominationInstance inst;
    InstanceData data;
};

InstanceParams load_instance(const CommonFlags& flags, std::optional<int> k_flag,
                             std::optional<int> d_flag, bool need_k = true,
                             bool need_d = true) {
    auto data = parse_instance(read_input(flags));
    std::optional<int> k = k_flag ? k_flag : data.budget;
    std::optional<int> d = d_flag ? d_flag : data.radius;
    if (need_k && !k) throw CLI::ValidationError("--k", "budget missing (flag or instance)");
    if (need_d && !d) d = 1;
    auto inst = DominationInstance::make(data.graph, data.effective_targets(), k.value_or(0),
                                         d.value_or(1), data.effective_candidates());
    return {std::move(inst), std::move(data)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-parameter domination toolkit for sparse graphs"};
    app.require_subcommand(1);

    CommonFlags flags;
    flags.guard_core = 16;
    std::optional<int> opt_k, opt_d, opt_r, opt_m, opt_h, opt_smax;

    auto* solve_cmd = app.add_subcommand("solve-domset", "distance-d domination");
    auto* conn_cmd = app.add_subcommand("solve-connected", "connected distance-d domination");
    auto* dconn_cmd =
        app.add_subcommand("solve-dconnected", "d-connected distance-d domination");
    auto* eff_cmd = app.add_subcommand("solve-efficient", "efficient domination");
    auto* roman_cmd = app.add_subcommand("solve-roman", "Roman domination");
    auto* scatter_cmd = app.add_subcommand("scatter", "bottleneck + scattered set extraction");
    auto* reduce_cmd = app.add_subcommand("reduce", "single target-removal reduction step");
    auto* minor_cmd = app.add_subcommand("minor-check", "depth-r clique minor (exhaustive)");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counterparts");
    auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance");
    auto* bench_cmd = app.add_subcommand("bench", "run a solver over a generated corpus");

    for (auto* cmd : {solve_cmd, conn_cmd, dconn_cmd}) {
        add_common(cmd, flags);
        cmd->add_option("--k", opt_k, "budget");
        cmd->add_option("--d", opt_d, "radius");
    }
    for (auto* cmd : {eff_cmd, roman_cmd}) {
        add_common(cmd, flags);
        cmd->add_option("--k", opt_k, "budget");
    }
    add_common(scatter_cmd, flags);
    scatter_cmd->add_option("--r", opt_r, "scattering radius")->required();
    scatter_cmd->add_option("--m", opt_m, "required scattered size")->required();
    scatter_cmd->add_option("--clique", opt_h, "clique bound (default s-cap + 2)");
    add_common(reduce_cmd, flags);
    reduce_cmd->add_option("--k", opt_k, "budget");
    reduce_cmd->add_option("--d", opt_d, "radius");
    add_common(minor_cmd, flags);
    minor_cmd->add_option("--clique", opt_h, "clique size")->required();
    minor_cmd->add_option("--r", opt_r, "depth")->required();

    auto* oracle_domset = oracle_cmd->add_subcommand("domset", "exact minimum domination");
    add_common(oracle_domset, flags);
    oracle_domset->add_option("--k", opt_k, "budget");
    oracle_domset->add_option("--d", opt_d, "radius");
    auto* oracle_scatter = oracle_cmd->add_subcommand("scattered", "exhaustive witness search");
    add_common(oracle_scatter, flags);
    oracle_scatter->add_option("--r", opt_r, "scattering radius")->required();
    oracle_scatter->add_option("--m", opt_m, "required scattered size")->required();
    oracle_scatter->add_option("--s-max", opt_smax, "largest bottleneck")->default_val(2);
    oracle_cmd->require_subcommand(1);

    std::string gen_family;
    std::vector<long> gen_params;
    add_common(gen_cmd, flags, false);
    gen_cmd->add_option("family", gen_family, "graph family")->required();
    gen_cmd->add_option("params", gen_params, "family parameters");
    gen_cmd->add_option("--k", opt_k, "budget to record in the instance");
    gen_cmd->add_option("--d", opt_d, "radius to record in the instance");

    std::string bench_solver = "domset", bench_family = "path", bench_k = "n/3";
    int bench_from = 10, bench_to = 100, bench_step = 10, bench_d = 1;
    add_common(bench_cmd, flags, false);
    bench_cmd->add_option("--solver", bench_solver,
                          "domset, connected, dconnected, efficient, roman");
    bench_cmd->add_option("--family", bench_family, "graph family (one size parameter)");
    bench_cmd->add_option("--n-from", bench_from, "first size");
    bench_cmd->add_option("--n-to", bench_to, "last size");
    bench_cmd->add_option("--n-step", bench_step, "size step");
    bench_cmd->add_option("--d", bench_d, "radius");
    bench_cmd->add_option("--k", bench_k, "budget: an integer, or n/DEN with optional +C/-C");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (flags.guard_core == 16) flags.guard_core = env_guard_default();
        auto profile = resolve_profile(flags);
        auto dopts = resolve_driver(flags);

        if (solve_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, opt_d);
            return emit_solve_result(flags, solve(inst, profile, dopts));
        }
        if (conn_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, opt_d);
            if (inst.budget > 6) throw guard_error("solve-connected: budget capped at 6");
            return emit_solve_result(flags, solve_connected_driver(inst, profile, dopts));
        }
        if (dconn_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, opt_d);
            if (inst.budget > 6) throw guard_error("solve-dconnected: budget capped at 6");
            return emit_solve_result(flags, solve_d_connected_driver(inst, profile, dopts));
        }
        if (eff_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, std::optional<int>(1));
            return emit_solve_result(flags, solve_efficient(inst.graph, inst.budget, profile,
                                                            dopts));
        }
        if (roman_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, std::optional<int>(1));
            RomanOptions ropts;
            ropts.s_cap = flags.s_cap;
            auto rr = solve_roman(inst.graph, inst.budget, ropts);
            if (flags.json_out) {
                json out{{"answer", answer_name(rr.answer)}, {"labels", json(nullptr)}};
                if (rr.labeling) out["labels"] = rr.labeling->labels;
                if (rr.labeling) out["weight"] = rr.labeling->weight();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "answer: " << answer_name(rr.answer) << "\n";
                if (rr.labeling) {
                    std::cout << "weight: " << rr.labeling->weight() << "\nlabels:";
                    for (int l : rr.labeling->labels) std::cout << ' ' << l;
                    std::cout << "\n";
                }
            }
            return rr.answer == Answer::yes ? kExitYes
                   : rr.answer == Answer::no ? kExitNo
                                             : kExitInconclusive;
        }
        if (scatter_cmd->parsed() || oracle_scatter->parsed()) {
            auto data = parse_instance(read_input(flags));
            VertexSet w = data.effective_targets();
            std::optional<ScatteredWitness> witness;
            std::string reason;
            if (scatter_cmd->parsed()) {
                int h = opt_h.value_or(flags.s_cap + 2);
                ScatterOptions sopts;
                sopts.mode = dopts.mode;
                auto fs = find_scattered(data.graph, w, *opt_r, *opt_m, h, sopts);
                if (fs.ok()) witness = std::move(fs.witness);
                else reason = fs.failure.reason;
            } else {
                witness = brute_force_scattered(data.graph, w, *opt_r, *opt_m,
                                                opt_smax.value_or(2));
                if (!witness) reason = "no witness exists within the bottleneck cap";
            }
            if (flags.json_out) {
                json out{{"found", witness.has_value()}};
                if (witness) {
                    out["bottleneck"] = set_to_json(witness->bottleneck);
                    out["scattered"] = set_to_json(witness->scattered);
                    out["radius"] = witness->radius;
                } else {
                    out["reason"] = reason;
                }
                std::cout << out.dump() << "\n";
            } else if (witness) {
                std::cout << "bottleneck:";
                for (Vertex v : witness->bottleneck) std::cout << ' ' << v;
                std::cout << "\nscattered:";
                for (Vertex v : witness->scattered) std::cout << ' ' << v;
                std::cout << "\n";
            } else {
                std::cout << "no witness: " << reason << "\n";
            }
            return witness ? kExitYes : kExitNo;
        }
        if (reduce_cmd->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, opt_d);
            Saturating sat;
            for (int s_try = 0; s_try <= flags.s_cap; ++s_try) {
                BigBound m_b = sat.mul(BigBound(static_cast<std::uint64_t>(inst.budget) + 2),
                                       sat.pow(BigBound(static_cast<std::uint64_t>(inst.radius) + 1),
                                               static_cast<std::uint64_t>(s_try)));
                if (m_b.is_huge() ||
                    m_b > BigBound(static_cast<std::uint64_t>(inst.targets.size()))) {
                    continue;
                }
                auto fs = find_scattered(inst.graph, inst.targets, inst.radius,
                                         static_cast<int>(m_b.as_u64()), s_try + 2);
                if (!fs.ok()) continue;
                Vertex removed = reduce_witness(inst, *fs.witness);
                if (flags.json_out) {
                    json out{{"removed", removed},
                             {"bottleneck", set_to_json(fs.witness->bottleneck)},
                             {"scattered", set_to_json(fs.witness->scattered)}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << "removed: " << removed << "\nbottleneck:";
                    for (Vertex v : fs.witness->bottleneck) std::cout << ' ' << v;
                    std::cout << "\n";
                }
                return kExitYes;
            }
            std::cout << (flags.json_out ? "{\"removed\":null}" : "no reducible target") << "\n";
            return kExitInconclusive;
        }
        if (minor_cmd->parsed()) {
            auto data = parse_instance(read_input(flags));
            bool found = shallow_clique_minor(data.graph, *opt_h, *opt_r);
            if (flags.json_out) {
                std::cout << json{{"minor", found}}.dump() << "\n";
            } else {
                std::cout << (found ? "minor present" : "no such minor") << "\n";
            }
            return found ? kExitYes : kExitNo;
        }
        if (oracle_domset->parsed()) {
            auto [inst, data] = load_instance(flags, opt_k, opt_d);
            auto x = brute_force_min_domset(inst.graph, inst.targets, inst.radius, inst.budget,
                                            inst.candidates);
            SolveResult res;
            res.answer = x ? Answer::yes : Answer::no;
            res.solution = std::move(x);
            return emit_solve_result(flags, res);
        }
        if (gen_cmd->parsed()) {
            Graph g = generate(gen_family, gen_params, flags.seed);
            InstanceData data;
            data.kind = "ds";
            data.graph = std::move(g);
            data.budget = opt_k;
            data.radius = opt_d;
            std::cout << emit_instance(data);
            return kExitYes;
        }
        if (bench_cmd->parsed()) {
            std::vector<BenchItem> corpus;
            for (int n = bench_from; n <= bench_to; n += bench_step) {
                BenchItem item;
                item.family = bench_family;
                item.params = {n};
                item.d = bench_d;
                if (bench_k.rfind("n/", 0) == 0) {
                    std::size_t off_pos = bench_k.find_first_of("+-", 2);
                    int den = std::stoi(bench_k.substr(2, off_pos - 2));
                    int off = off_pos == std::string::npos
                                  ? 0
                                  : std::stoi(bench_k.substr(off_pos));
                    item.k = (n + den - 1) / den + off;
                } else {
                    item.k = std::stoi(bench_k);
                }
                corpus.push_back(std::move(item));
            }
            auto rows = bench(corpus, bench_solver, profile, dopts, flags.seed);
            if (flags.json_out) {
                json arr = json::array();
                for (const auto& row : rows) {
                    arr.push_back({{"family", row.family},
                                   {"n", row.n},
                                   {"k", row.k},
                                   {"d", row.d},
                                   {"answer", answer_name(row.answer)},
                                   {"reductions", row.trace.size()},
                                   {"max_s", row.max_bottleneck()},
                                   {"wall_ms", row.wall_ms}});
                }
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << bench_csv(rows);
            }
            return kExitYes;
        }
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const guard_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
