#include "sparsedom/bounds.hpp"

#include <stdexcept>

namespace sparsedom {

BigBound BigBound::huge() {
    BigBound b;
    b.huge_ = true;
    return b;
}

BigBound BigBound::finite(u128 v) {
    BigBound b;
    b.value_ = v;
    return b;
}

u128 BigBound::raw() const {
    if (huge_) throw std::logic_error("raw() on HUGE bound");
    return value_;
}

std::uint64_t BigBound::as_u64() const {
    if (huge_ || value_ > ~static_cast<std::uint64_t>(0)) {
        throw std::logic_error("bound does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value_);
}

std::string BigBound::to_string() const {
    if (huge_) return "HUGE";
    u128 v = value_;
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

bool operator==(const BigBound& a, const BigBound& b) {
    if (a.huge_ || b.huge_) return a.huge_ && b.huge_;
    return a.value_ == b.value_;
}

bool operator<(const BigBound& a, const BigBound& b) {
    if (a.huge_) return false;
    if (b.huge_) return true;
    return a.value_ < b.value_;
}

BigBound Saturating::make(u128 v) const {
    if (v > cap_) return BigBound::huge();
    return BigBound::finite(v);
}

BigBound Saturating::add(BigBound a, BigBound b) const {
    if (a.is_huge() || b.is_huge()) return BigBound::huge();
    u128 x = a.raw(), y = b.raw();
    if (x > cap_ - y) return BigBound::huge();  // cap_ >= y since y <= cap_
    return make(x + y);
}

BigBound Saturating::mul(BigBound a, BigBound b) const {
    if (a.is_huge() || b.is_huge()) return BigBound::huge();
    u128 x = a.raw(), y = b.raw();
    if (x == 0 || y == 0) return BigBound::finite(0);
    if (x > cap_ / y) return BigBound::huge();
    return make(x * y);
}

BigBound Saturating::pow(BigBound base, std::uint64_t exp) const {
    if (exp == 0) return BigBound::finite(1);
    if (base.is_huge()) return BigBound::huge();
    BigBound acc = BigBound::finite(1);
    for (std::uint64_t i = 0; i < exp; ++i) {
        acc = mul(acc, base);
        if (acc.is_huge()) return acc;
    }
    return acc;
}

namespace {

// C(n, k) with saturation to u64 max; k is small in all callers.
std::uint64_t binom_u64(std::uint64_t n, int k) {
    if (k < 0) return 0;
    if (static_cast<std::uint64_t>(k) > n) return 0;
    u128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - static_cast<std::uint64_t>(k) + i) / i;
        if (acc > ~static_cast<std::uint64_t>(0)) return ~static_cast<std::uint64_t>(0);
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

BigBound ramsey_upper(int colors, int tuple_size, BigBound target, const Saturating& sat) {
    if (colors < 1 || tuple_size < 1) {
        throw std::invalid_argument("ramsey_upper: colors and tuple_size must be positive");
    }
    if (target <= BigBound(static_cast<std::uint64_t>(tuple_size))) {
        // A target-sized set carries at most one tuple, so it is homogeneous.
        return target;
    }
    if (target.is_huge()) return BigBound::huge();
    if (tuple_size == 1) {
        // Pigeonhole: colors * (target - 1) + 1.
        BigBound t = sat.mul(BigBound(static_cast<std::uint64_t>(colors)),
                             BigBound::finite(target.raw() - 1));
        return sat.add(t, BigBound(1));
    }
    // Cone construction: extract a chain of T elements whose tuple colors
    // depend only on the first tuple_size-1 entries, then recurse on the
    // derived coloring. Chain length T = bound(tuple_size - 1) + 1.
    BigBound chain = ramsey_upper(colors, tuple_size - 1, target, sat);
    if (chain.is_huge()) return BigBound::huge();
    u128 steps128 = chain.raw() + 1;
    if (colors == 1) {
        // Every step keeps the whole class; the required size equals the
        // number of selection steps.
        return sat.make(steps128);
    }
    // With >= 2 colors each step past the first tuple_size-1 at least
    // doubles the requirement, so long chains saturate immediately.
    if (steps128 > static_cast<u128>(tuple_size) + 200) return BigBound::huge();
    const std::uint64_t steps = static_cast<std::uint64_t>(steps128);
    // needed_i = colors^C(i, tuple_size-1) * needed_{i+1} + 1, needed_steps = 0.
    BigBound needed = BigBound(0);
    for (std::uint64_t i = steps; i-- > 0;) {
        std::uint64_t classes_exp = binom_u64(i, tuple_size - 1);
        needed = sat.add(sat.mul(sat.pow(BigBound(static_cast<std::uint64_t>(colors)),
                                         classes_exp),
                                 needed),
                         BigBound(1));
        if (needed.is_huge()) return needed;
    }
    return needed;
}

BigBound n_threshold(int h, int r, BigBound m, const Saturating& sat, InnerColors reading) {
    if (h < 3) throw std::invalid_argument("n_threshold: h must be at least 3");
    if (r < 0) throw std::invalid_argument("n_threshold: negative depth");
    const int inner = reading == InnerColors::h_plus_one ? h + 1 : h - 1;
    BigBound x = m;
    for (int it = 0; it < r; ++it) {
        BigBound t = x;
        for (int j = 0; j < h - 2; ++j) {
            // b_h(t) = R(inner, h, (h-2) * (t + 1))
            BigBound arg = sat.mul(BigBound(static_cast<std::uint64_t>(h - 2)),
                                   sat.add(t, BigBound(1)));
            t = ramsey_upper(inner, h, arg, sat);
            if (t.is_huge()) break;
        }
        x = ramsey_upper(2, 2, t, sat);
        if (x.is_huge()) return x;
    }
    return x;
}

ClassProfile profile_bounded_degree(int max_deg, ProfileMode mode, const Saturating& sat) {
    if (max_deg < 2) throw std::invalid_argument("profile_bounded_degree: max_deg must be >= 2");
    ClassProfile p;
    p.mode = mode;
    p.name = (mode == ProfileMode::paper_faithful ? "bounded-degree-paper-" : "bounded-degree-") +
             std::to_string(max_deg);
    p.clique_bound = [max_deg](int) { return max_deg + 2; };
    p.margin = [](int) { return 0; };
    if (mode == ProfileMode::paper_faithful) {
        // Classical closed form (d-1)^r + d + 1; note it has no dependence
        // on m.
        p.threshold = [max_deg, sat](int r, BigBound) {
            BigBound t = sat.pow(BigBound(static_cast<std::uint64_t>(max_deg - 1)),
                                 static_cast<std::uint64_t>(r));
            return sat.add(t, BigBound(static_cast<std::uint64_t>(max_deg + 1)));
        };
    } else {
        // Packing bound: a radius-2r ball blocks at most ballsize(max_deg, 2r)
        // candidates, so any W larger than m * ballsize contains an
        // r-scattered m-subset with no bottleneck at all.
        p.threshold = [max_deg, sat](int r, BigBound m) {
            BigBound layer = BigBound(1);
            BigBound shell_sum = BigBound(0);
            for (int i = 0; i < 2 * r; ++i) {
                shell_sum = sat.add(shell_sum, layer);
                layer = sat.mul(layer, BigBound(static_cast<std::uint64_t>(max_deg - 1)));
            }
            BigBound ballsize = sat.add(
                BigBound(1), sat.mul(BigBound(static_cast<std::uint64_t>(max_deg)), shell_sum));
            return sat.mul(m, ballsize);
        };
    }
    return p;
}

ClassProfile profile_from_h(std::function<int(int)> h, const Saturating& sat,
                            InnerColors reading) {
    ClassProfile p;
    p.mode = ProfileMode::paper_faithful;
    p.name = "excluded-clique";
    p.clique_bound = h;
    p.margin = [h](int r) {
        int hr = h(r);
        if (hr < 3) throw std::invalid_argument("profile_from_h: h(r) must be >= 3");
        return hr - 1;  // |S| < h(r) - 1, i.e. |S| <= h(r) - 2
    };
    p.threshold = [h, sat, reading](int r, BigBound m) {
        return n_threshold(h(r), r, m, sat, reading);
    };
    return p;
}

}  // namespace sparsedom
