#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsedom/domination.hpp"

namespace sparsedom {

// One solver run over one generated instance.
struct RunReport {
    std::string instance_id;
    std::string family;
    int n = 0;
    int k = 0;
    int d = 0;
    std::string solver;
    std::string mode;
    Answer answer = Answer::inconclusive;
    std::optional<VertexSet> witness;
    std::vector<ReductionStep> trace;
    double wall_ms = 0.0;

    int max_bottleneck() const {
        int s = 0;
        for (const auto& step : trace) s = std::max(s, step.bottleneck_size);
        return s;
    }
};

struct BenchItem {
    std::string family;
    std::vector<long> params;
    int k = 1;
    int d = 1;
};

// Run `solver` (domset, connected, dconnected, efficient, roman) over the
// corpus in order. Yes-witnesses are re-verified against the domination
// predicates before the row is emitted; per-row failures are reported in
// the row instead of aborting the run.
std::vector<RunReport> bench(const std::vector<BenchItem>& corpus, const std::string& solver,
                             const ClassProfile& profile, const DriverOptions& opts,
                             std::uint64_t seed);

std::string bench_csv(const std::vector<RunReport>& rows);

}  // namespace sparsedom
