#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arspec {

/// Largest ambient size a subset_mask can describe.
inline constexpr unsigned max_ambient = 62;

/**
 * A subset of [n] = {1, ..., n} stored as an n-bit characteristic mask.
 *
 * Element i lives at bit i-1, so the mask value is exactly the 0-based
 * position of the set in the binary (lexicographic) order used to index
 * rows and columns of every matrix in this library.
 */
class subset_mask {
public:
    using bits_type = std::uint64_t;

    constexpr subset_mask() = default;

    constexpr subset_mask(unsigned n, bits_type bits) : n_(n), bits_(bits) {
        if (n > max_ambient)
            throw std::invalid_argument("subset_mask: ambient size too large");
        if ((bits & ~full_bits(n)) != 0)
            throw std::invalid_argument("subset_mask: element outside [n]");
    }

    static constexpr subset_mask empty(unsigned n) { return {n, 0}; }
    static constexpr subset_mask full(unsigned n) { return {n, full_bits(n)}; }

    /// The interval [lo, hi] inside [n]; empty when lo > hi.
    static constexpr subset_mask interval(unsigned n, unsigned lo, unsigned hi) {
        if (lo < 1) lo = 1;
        if (hi > n) hi = n;
        if (lo > hi) return empty(n);
        return {n, full_bits(hi) & ~full_bits(lo - 1)};
    }

    static subset_mask of(unsigned n, std::initializer_list<unsigned> elements) {
        bits_type b = 0;
        for (unsigned e : elements) {
            if (e < 1 || e > n)
                throw std::invalid_argument("subset_mask: element outside [n]");
            b |= bits_type{1} << (e - 1);
        }
        return {n, b};
    }

    constexpr unsigned ambient() const { return n_; }
    constexpr bits_type bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }

    constexpr bool contains(unsigned element) const {
        return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1u) != 0;
    }

    constexpr subset_mask complement() const { return {n_, ~bits_ & full_bits(n_)}; }

    constexpr bool includes(subset_mask other) const { return (other.bits_ & ~bits_) == 0; }

    /// Elements of the set, ascending.
    std::vector<unsigned> elements() const {
        std::vector<unsigned> out;
        out.reserve(size());
        for (bits_type b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
        return out;
    }

    friend constexpr bool operator==(subset_mask, subset_mask) = default;

    friend constexpr subset_mask operator&(subset_mask a, subset_mask b) {
        return {a.n_, a.bits_ & b.bits_};
    }
    friend constexpr subset_mask operator|(subset_mask a, subset_mask b) {
        return {a.n_, a.bits_ | b.bits_};
    }
    /// Set difference a \ b.
    friend constexpr subset_mask operator-(subset_mask a, subset_mask b) {
        return {a.n_, a.bits_ & ~b.bits_};
    }

    static constexpr bits_type full_bits(unsigned n) {
        return n == 0 ? 0 : (~bits_type{0} >> (64 - n));
    }

private:
    unsigned n_ = 0;
    bits_type bits_ = 0;
};

/// A run: the interval [lo, hi] of consecutive elements.
struct run {
    unsigned lo = 1;
    unsigned hi = 1;

    constexpr unsigned length() const { return hi - lo + 1; }
    friend constexpr bool operator==(run, run) = default;
};

namespace detail {

// Bits that start a run: set in x, clear one position below.
constexpr std::uint64_t run_starts(std::uint64_t x) { return x & ~(x << 1); }

} // namespace detail

/// Maximal intervals of `s`, ascending.
inline std::vector<run> runs(subset_mask s) {
    std::vector<run> out;
    std::uint64_t b = s.bits();
    while (b != 0) {
        unsigned lo = static_cast<unsigned>(std::countr_zero(b));
        unsigned len = static_cast<unsigned>(std::countr_one(b >> lo));
        out.push_back({lo + 1, lo + len});
        b &= (len + lo >= 64) ? 0 : (~std::uint64_t{0} << (lo + len));
    }
    return out;
}

/// 1-based position in the binary order: 1 + sum of 2^(i-1) over i in s.
constexpr std::uint64_t r_index(subset_mask s) { return s.bits() + 1; }

constexpr subset_mask r_inverse(std::uint64_t index, unsigned n) {
    if (n > max_ambient)
        throw std::invalid_argument("r_inverse: ambient size too large");
    if (index < 1 || index > (std::uint64_t{1} << n))
        throw std::out_of_range("r_inverse: index outside [1, 2^n]");
    return {n, index - 1};
}

/// I >> J: every run of I & J starts where a run of I starts.
///
/// A run of I & J always lies inside the run of I holding its minimum,
/// so the prefix condition reduces to comparing run starts.
constexpr bool dominates(subset_mask i, subset_mask j) {
    const auto meet = (i & j).bits();
    return (detail::run_starts(meet) & ~detail::run_starts(i.bits())) == 0;
}

/// E admissible for I: E inside I, no run minimum of I, no two consecutive elements.
constexpr bool admissible(subset_mask e, subset_mask i) {
    const auto eb = e.bits();
    return i.includes(e) && (eb & detail::run_starts(i.bits())) == 0 && (eb & (eb >> 1)) == 0;
}

/// I ~> J: J is the complement of I together with an admissible E for I.
constexpr bool arrow(subset_mask i, subset_mask j) {
    return j.includes(i.complement()) && admissible(j & i, i);
}

/// Product of (run length + 1) over the runs of `s`.
inline std::uint64_t pi(subset_mask s) {
    std::uint64_t p = 1;
    for (const run& r : runs(s)) p *= r.length() + 1;
    return p;
}

/// As pi, skipping the run that contains the top element n.
inline std::uint64_t pi_prime(subset_mask s) {
    std::uint64_t p = 1;
    for (const run& r : runs(s))
        if (r.hi != s.ambient()) p *= r.length() + 1;
    return p;
}

/// {i + offset : i in s}, re-embedded in [n]. Elements pushed past n are an error.
constexpr subset_mask shift_up(subset_mask s, unsigned offset, unsigned n) {
    if (s.bits() != 0 && static_cast<unsigned>(std::bit_width(s.bits())) + offset > n)
        throw std::invalid_argument("shift_up: result leaves [n]");
    return {n, s.bits() << offset};
}

/// `{1,4,5}`; `{}` for the empty set.
inline std::string to_string(subset_mask s) {
    std::string out = "{";
    bool first = true;
    for (unsigned e : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

/// Parses the literal produced by to_string. Whitespace around elements is ignored.
inline subset_mask parse_subset(std::string_view text, unsigned n) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("parse_subset: expected {...}");
    text = trim(text.substr(1, text.size() - 2));
    std::uint64_t bits = 0;
    unsigned previous = 0;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        unsigned value = 0;
        if (token.empty()) throw std::invalid_argument("parse_subset: empty element");
        for (char c : token) {
            if (c < '0' || c > '9') throw std::invalid_argument("parse_subset: bad element");
            value = value * 10 + static_cast<unsigned>(c - '0');
            if (value > max_ambient) throw std::invalid_argument("parse_subset: element outside [n]");
        }
        if (value < 1 || value > n) throw std::invalid_argument("parse_subset: element outside [n]");
        if (value <= previous) throw std::invalid_argument("parse_subset: elements must ascend");
        previous = value;
        bits |= std::uint64_t{1} << (value - 1);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (trim(text).empty()) throw std::invalid_argument("parse_subset: trailing comma");
    }
    return {n, bits};
}

} // namespace arspec
