#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace sparsedom {

using u128 = unsigned __int128;

// Nonnegative integer that saturates to an absorbing HUGE sentinel once a
// computation exceeds the configured cap. Downstream code only ever compares
// these against set sizes, so HUGE keeps every comparison well-defined.
class BigBound {
public:
    BigBound() = default;
    BigBound(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by design

    static BigBound huge();
    static BigBound finite(u128 v);

    bool is_huge() const { return huge_; }
    u128 raw() const;
    std::uint64_t as_u64() const;
    std::string to_string() const;

    friend bool operator==(const BigBound& a, const BigBound& b);
    friend bool operator<(const BigBound& a, const BigBound& b);
    friend bool operator<=(const BigBound& a, const BigBound& b) { return a < b || a == b; }
    friend bool operator>(const BigBound& a, const BigBound& b) { return !(a <= b); }
    friend bool operator>=(const BigBound& a, const BigBound& b) { return !(a < b); }

private:
    u128 value_ = 0;
    bool huge_ = false;
};

// Saturating arithmetic context with a configurable cap (default 2^64).
class Saturating {
public:
    static constexpr u128 default_cap() { return static_cast<u128>(1) << 64; }

    explicit Saturating(u128 cap = default_cap()) : cap_(cap) {}

    u128 cap() const { return cap_; }

    BigBound make(u128 v) const;
    BigBound add(BigBound a, BigBound b) const;
    BigBound mul(BigBound a, BigBound b) const;
    BigBound pow(BigBound base, std::uint64_t exp) const;

private:
    u128 cap_;
};

// Which value the first argument of the inner pigeonhole bound takes; the
// source formula leaves it underdetermined, so both readings are selectable.
enum class InnerColors { h_plus_one, h_minus_one };

// Upper bound on the Ramsey number R(colors, tuple_size, target): any set
// larger than the returned value, with its tuple_size-subsets colored by
// `colors` colors, contains a homogeneous subset of size target.
// Monotone nondecreasing in colors and target everywhere, and in tuple_size
// within the nontrivial region target > tuple_size.
BigBound ramsey_upper(int colors, int tuple_size, BigBound target,
                      const Saturating& sat = Saturating());

// Quasi-wideness threshold N(h, r, m): the composed tower c_h iterated r
// times on m, where c_h(x) = R(2, 2, b_h^(h-2)(x)) and
// b_h(x) = R(first, h, (h-2)(x+1)) with `first` given by `reading`.
BigBound n_threshold(int h, int r, BigBound m, const Saturating& sat = Saturating(),
                     InnerColors reading = InnerColors::h_plus_one);

enum class ProfileMode { paper_faithful, practical_safe };

// Characterization of a sparse graph class: excluded-clique size h(r),
// margin s(r) (the strict bound on bottleneck size; 0 means the bottleneck
// must be empty), and the wideness threshold N(r, m).
struct ClassProfile {
    std::string name;
    ProfileMode mode = ProfileMode::practical_safe;
    std::function<int(int)> clique_bound;          // h(r) >= 2
    std::function<int(int)> margin;                // s(r) >= 0
    std::function<BigBound(int, BigBound)> threshold;  // N(r, m)

    // Largest bottleneck the profile admits: |S| < s(r), with margin 0 read
    // as "the bottleneck is always empty".
    int max_bottleneck(int r) const {
        int s = margin(r);
        return s == 0 ? 0 : s - 1;
    }
};

// Graphs of maximum degree max_deg. Paper-faithful mode keeps the classical
// closed form; practical-safe mode uses the greedy packing bound
// N(r, m) = m * |ball of radius 2r| so that desk-scale thresholds stay
// finite and sound.
ClassProfile profile_bounded_degree(int max_deg,
                                    ProfileMode mode = ProfileMode::practical_safe,
                                    const Saturating& sat = Saturating());

// Class excluding K_{h(r)} as a depth-r minor; requires h(r) >= 3.
ClassProfile profile_from_h(std::function<int(int)> h,
                            const Saturating& sat = Saturating(),
                            InnerColors reading = InnerColors::h_plus_one);

}  // namespace sparsedom
