#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrices.hpp"
#include "subset.hpp"
#include "verification.hpp"

namespace arspec {

/**
 * The pairing permutation as a list of subsets.
 *
 * values[p] holds the set at 1-based position p + 1. Complementary sets sit
 * at adjacent positions (odd position first, containing 1), and every set
 * reachable from a set by `arrow`, other than its complement, appears
 * earlier in the list.
 */
struct sigma_table {
    unsigned n = 0;
    std::vector<subset_mask> values;

    /// Value at 1-based position.
    subset_mask at(std::size_t position) const { return values.at(position - 1); }

    friend bool operator==(const sigma_table&, const sigma_table&) = default;
};

/// Builds the table chunk by chunk from the tables of every smaller size.
inline sigma_table sigma_recursive(unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "sigma_recursive");
    if (n == 0) return {0, {subset_mask::empty(0)}};

    std::vector<std::vector<subset_mask>> tables(n + 1);
    tables[1] = {subset_mask::of(1, {1}), subset_mask::empty(1)};
    for (unsigned m = 2; m <= n; ++m) {
        auto& cur = tables[m];
        cur.reserve(dim_of(m));
        for (unsigned k = 0; k + 2 <= m; ++k) {
            const auto& sub = tables[m - k - 1];
            const auto head = subset_mask::interval(m, 1, k + 1);
            for (std::size_t i = 0; i + 1 < sub.size(); i += 2) {
                cur.push_back(head | shift_up(sub[i + 1], k + 1, m));
                cur.push_back(shift_up(sub[i], k + 1, m));
            }
        }
        cur.push_back(subset_mask::full(m));
        cur.push_back(subset_mask::empty(m));
    }
    return {n, std::move(tables[n])};
}

/// The set at the position of I, computed from I alone: t is a member iff
/// ({1} together with [n-t+2, n]) minus I has odd size.
inline subset_mask sigma_closed_form(unsigned n, subset_mask i) {
    if (i.ambient() != n) throw std::invalid_argument("sigma_closed_form: ambient size mismatch");
    std::uint64_t out = 0;
    for (unsigned t = 1; t <= n; ++t) {
        const auto probe = subset_mask::of(n, {1}) | subset_mask::interval(n, n - t + 2, n);
        if ((probe - i).size() % 2 == 1) out |= std::uint64_t{1} << (t - 1);
    }
    return {n, out};
}

inline sigma_table sigma_closed_form_table(unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "sigma_closed_form_table");
    if (n == 0) return {0, {subset_mask::empty(0)}};
    sigma_table t{n, {}};
    t.values.reserve(dim_of(n));
    for (std::uint64_t b = 0; b < dim_of(n); ++b) t.values.push_back(sigma_closed_form(n, subset_mask{n, b}));
    return t;
}

/// Position p maps to r_index of the set stored there.
inline std::vector<std::uint64_t> sigma_as_permutation(const sigma_table& t) {
    std::vector<std::uint64_t> out;
    out.reserve(t.values.size());
    for (auto s : t.values) out.push_back(r_index(s));
    return out;
}

/// Checks pairing, membership of 1, bijectivity, and the arrow ordering over every pair of positions.
inline verification_outcome verify_lemma17(const sigma_table& t) {
    const char* claim = "sigma-ordering";
    const unsigned n = t.n;
    const std::size_t d = dim_of(n);
    if (t.values.size() != d) return verification_outcome::fail(claim, n, "size=" + std::to_string(t.values.size()));
    std::vector<bool> seen(d, false);
    for (std::size_t p = 0; p < d; ++p) {
        const auto s = t.values[p];
        if (s.ambient() != n || seen[s.bits()])
            return verification_outcome::fail(claim, n, "repeat at position " + std::to_string(p + 1) + " " + to_string(s));
        seen[s.bits()] = true;
    }
    if (n == 0) return verification_outcome::pass(claim, n);
    for (std::size_t p = 0; p < d; p += 2) {
        if (!t.values[p].contains(1))
            return verification_outcome::fail(claim, n, "position " + std::to_string(p + 1) + " " +
                                                            to_string(t.values[p]) + " lacks 1");
        if (t.values[p + 1] != t.values[p].complement())
            return verification_outcome::fail(claim, n, "positions " + std::to_string(p + 1) + "," +
                                                            std::to_string(p + 2) + " not complementary");
    }
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
            const auto si = t.values[p];
            const auto sj = t.values[q];
            if (arrow(si, sj) && si != sj.complement())
                return verification_outcome::fail(claim, n, "i=" + std::to_string(p + 1) + " " + to_string(si) +
                                                                " j=" + std::to_string(q + 1) + " " + to_string(sj));
        }
    return verification_outcome::pass(claim, n);
}

/// Example-table layout: one line per complementary pair, `i<TAB>{odd}<TAB>{even}`.
inline void write_sigma_table(std::ostream& os, const sigma_table& t) {
    for (std::size_t p = 0; p < t.values.size(); p += 2) {
        os << (p / 2 + 1) << '\t' << to_string(t.values[p]);
        if (p + 1 < t.values.size()) os << '\t' << to_string(t.values[p + 1]);
        os << '\n';
    }
}

inline std::string to_string(const sigma_table& t) {
    std::ostringstream os;
    write_sigma_table(os, t);
    return os.str();
}

// --- Thue-Morse encodings -------------------------------------------------

struct binary_word {
    std::vector<bool> bits;

    std::size_t size() const { return bits.size(); }
    bool operator[](std::size_t k) const { return bits[k]; }
    std::string str() const {
        std::string s;
        s.reserve(bits.size());
        for (bool b : bits) s += b ? '1' : '0';
        return s;
    }
    friend bool operator==(const binary_word&, const binary_word&) = default;
};

/// Parity of the binary digit sum of k.
constexpr bool thue_morse(std::uint64_t k) { return (std::popcount(k) & 1) != 0; }

/// w_0 = 0, w_{m+1} = w_m followed by its bitwise complement.
inline binary_word thue_morse_word(unsigned m) {
    if (m > 40) throw resource_limit_error("thue_morse_word: m too large");
    binary_word w{{false}};
    w.bits.reserve(std::size_t{1} << m);
    for (unsigned step = 0; step < m; ++step) {
        const std::size_t len = w.bits.size();
        for (std::size_t k = 0; k < len; ++k) w.bits.push_back(!w.bits[k]);
    }
    return w;
}

/// Membership of j read down the table: bit p is set iff j is in values[p].
inline binary_word sigma_word(const sigma_table& t, unsigned j) {
    if (j < 1 || j > t.n) throw std::out_of_range("sigma_word: j outside [1, n]");
    binary_word w;
    w.bits.reserve(t.values.size());
    for (auto s : t.values) w.bits.push_back(s.contains(j));
    return w;
}

/// The same word assembled from Thue-Morse blocks: for q < 2^(j-1), the pair
/// (t_q, !t_q) (j even) or (!t_q, t_q) (j odd), repeated 2^(n-j) times.
inline binary_word sigma_word_thue_morse(unsigned n, unsigned j) {
    if (j < 1 || j > n) throw std::out_of_range("sigma_word_thue_morse: j outside [1, n]");
    if (n > 40) throw resource_limit_error("sigma_word_thue_morse: n too large");
    const std::uint64_t repeat = std::uint64_t{1} << (n - j);
    const std::uint64_t blocks = std::uint64_t{1} << (j - 1);
    binary_word w;
    w.bits.reserve(std::size_t{1} << n);
    for (std::uint64_t q = 0; q < blocks; ++q) {
        const bool tq = thue_morse(q);
        const bool first = (j % 2 == 0) ? tq : !tq;
        for (std::uint64_t r = 0; r < repeat; ++r) {
            w.bits.push_back(first);
            w.bits.push_back(!first);
        }
    }
    return w;
}

} // namespace arspec
