#include "doctest.h"
#include "sparsedom/bounds.hpp"
#include "sparsedom/generators.hpp"
#include "sparsedom/wideness.hpp"
#include "test_helpers.hpp"

using namespace sparsedom;

namespace {

// Does every `colors`-coloring of the pairs of an n-set contain a
// monochromatic triple? Exhaustive over all colorings; only usable for
// 2 colors and tiny n.
bool every_pair_coloring_has_mono_triple(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> index;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) index.emplace_back(i, j);
    }
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<std::vector<int>> color(n, std::vector<int>(n, 0));
        for (int p = 0; p < pairs; ++p) {
            auto [i, j] = index[p];
            color[i][j] = color[j][i] = (mask >> p) & 1;
        }
        bool mono = false;
        for (int a = 0; a < n && !mono; ++a) {
            for (int b = a + 1; b < n && !mono; ++b) {
                for (int c = b + 1; c < n && !mono; ++c) {
                    if (color[a][b] == color[b][c] && color[b][c] == color[a][c]) mono = true;
                }
            }
        }
        if (!mono) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("saturating arithmetic absorbs at the cap") {
    Saturating sat;
    CHECK(sat.add(BigBound(5), BigBound(7)) == BigBound(12));
    CHECK(sat.mul(BigBound(1) , BigBound::huge()).is_huge());
    CHECK(sat.add(BigBound::huge(), BigBound(0)).is_huge());
    CHECK(sat.pow(BigBound(2), 64) == BigBound::finite(static_cast<u128>(1) << 64));
    CHECK(sat.pow(BigBound(2), 65).is_huge());  // first value past the default cap
    CHECK(sat.pow(BigBound(2), 63) == BigBound(std::uint64_t(1) << 63));
    CHECK(sat.pow(BigBound::huge(), 0) == BigBound(1));
    CHECK(BigBound::huge() > BigBound(~std::uint64_t(0)));

    Saturating tiny(100);
    CHECK(tiny.mul(BigBound(10), BigBound(10)) == BigBound(100));
    CHECK(tiny.mul(BigBound(10), BigBound(11)).is_huge());
    CHECK(tiny.add(tiny.mul(BigBound(10), BigBound(11)), BigBound(1)).is_huge());
}

TEST_CASE("pigeonhole base case") {
    CHECK(ramsey_upper(2, 1, 3) == BigBound(5));
    CHECK(ramsey_upper(3, 1, 4) == BigBound(10));
    // Any target at most the tuple size is trivially homogeneous.
    CHECK(ramsey_upper(5, 3, 3) == BigBound(3));
    CHECK(ramsey_upper(2, 4, 2) == BigBound(2));
}

TEST_CASE("pair-coloring bound is certified exhaustively at the classical value") {
    // Every 2-coloring of the pairs of a 6-set has a monochromatic triple,
    // and some 5-set coloring does not, so any sound bound is at least 6.
    CHECK(every_pair_coloring_has_mono_triple(6));
    CHECK_FALSE(every_pair_coloring_has_mono_triple(5));
    BigBound b = ramsey_upper(2, 2, 3);
    CHECK(b >= BigBound(6));
    // Frozen value of the cone recursion (chain of 6, doubling per step).
    CHECK(b == BigBound(1100));
}

TEST_CASE("monotone in colors and target; in tuple size on the nontrivial region") {
    auto val = [](int x, int y, int z) { return ramsey_upper(x, y, z); };
    for (int x = 1; x <= 3; ++x) {
        for (int y = 1; y <= 3; ++y) {
            for (int z = 1; z <= 6; ++z) {
                CHECK(val(x, y, z) <= val(x + 1, y, z));
                CHECK(val(x, y, z) <= val(x, y, z + 1));
                // Monotonicity in tuple size only holds where both sides are
                // nontrivial; crossing the target <= tuple boundary shrinks
                // the bound to its trivial value.
                if (z > y + 1) CHECK(val(x, y, z) <= val(x, y + 1, z));
            }
        }
    }
}

TEST_CASE("threshold tower composes the pair bound") {
    CHECK(n_threshold(3, 0, 17) == BigBound(17));
    CHECK(n_threshold(7, 0, 3) == BigBound(3));
    // One iteration at h = 3 expands to the pair bound of the inner bound.
    BigBound inner = ramsey_upper(4, 3, 3);
    CHECK(inner == BigBound(3));
    CHECK(n_threshold(3, 1, 2) == ramsey_upper(2, 2, inner));
    CHECK(n_threshold(3, 1, 2) == BigBound(1100));
    CHECK(n_threshold(5, 3, 10).is_huge());
    // The alternate reading of the inner color count is selectable.
    CHECK(n_threshold(3, 1, 2, Saturating(), InnerColors::h_minus_one) ==
          ramsey_upper(2, 2, ramsey_upper(2, 3, 3)));
}

TEST_CASE("threshold dominates its argument and grows with it") {
    for (int h : {3, 4}) {
        for (int r : {0, 1, 2}) {
            BigBound prev = BigBound(0);
            for (std::uint64_t m = 1; m <= 6; ++m) {
                BigBound cur = n_threshold(h, r, m);
                CHECK(cur >= BigBound(m));
                if (!cur.is_huge()) CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("bounded-degree profiles") {
    auto paper = profile_bounded_degree(3, ProfileMode::paper_faithful);
    CHECK(paper.threshold(2, 999) == BigBound(8));  // (3-1)^2 + 3 + 1, no m dependence
    CHECK(paper.margin(5) == 0);
    CHECK(paper.max_bottleneck(5) == 0);
    CHECK(paper.clique_bound(0) == 5);

    auto safe = profile_bounded_degree(3);
    CHECK(safe.threshold(1, 2) == BigBound(20));
    CHECK(safe.threshold(0, 9) == BigBound(9));  // radius-0 ball is a single vertex
    CHECK(safe.threshold(1, 1) >= BigBound(1));
}

TEST_CASE("practical bounded-degree threshold is a sound packing bound") {
    // Whenever a target set exceeds the threshold, a greedy packing finds
    // the promised scattered subset without deleting anything.
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int max_deg = 3 + static_cast<int>(seed % 2);
        auto profile = profile_bounded_degree(max_deg);
        int n = 60 + static_cast<int>(seed * 7 % 241);
        Graph g = make_random_max_deg(n, max_deg, n / 2, seed);
        for (int r = 1; r <= 2; ++r) {
            for (int m = 2; m <= 4; ++m) {
                BigBound bound = profile.threshold(r, static_cast<std::uint64_t>(m));
                if (bound.is_huge() || bound >= BigBound(static_cast<std::uint64_t>(n))) {
                    continue;
                }
                int want = static_cast<int>(bound.as_u64()) + 1;
                VertexSet w = VertexSet::full(want);
                auto fs = find_scattered(g, w, r, m, 2);
                CHECK(fs.ok());
                if (fs.ok()) CHECK(fs.witness->bottleneck.empty());
                ++tested;
            }
        }
    }
    CHECK(tested >= 200);
}

TEST_CASE("clique-exclusion profiles derive margin and threshold from h") {
    auto forest_like = profile_from_h([](int) { return 3; });
    CHECK(forest_like.margin(4) == 2);          // bottlenecks stay below 2
    CHECK(forest_like.max_bottleneck(4) == 1);  // i.e. at most one vertex
    auto five = profile_from_h([](int) { return 5; });
    CHECK(five.threshold(0, 123) == BigBound(123));
    auto growing = profile_from_h([](int r) { return r + 4; });
    CHECK(growing.margin(2) == 5);
}
