#pragma once

#include <bit>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matrices.hpp"
#include "polynomial.hpp"
#include "sigma.hpp"
#include "subset.hpp"
#include "verification.hpp"

// Ground truth that shares no code with the composition formulas: brute-force
// characteristic polynomials and determinants, plus scans for every
// structural property of the conjugated matrices.

namespace arspec {

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
template <class T>
bigint oracle_det(const basic_matrix<T>& input) {
    exact_matrix m = convert<bigint>(input);
    const std::size_t d = m.dim();
    if (d == 0) return 1;
    bigint previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < d && m(r, k) == 0) ++r;
            if (r == d) return 0;
            for (std::size_t c = 0; c < d; ++c) std::swap(m(k, c), m(r, c));
            sign = -sign;
        }
        mpz_srcptr pivot = m(k, k).get_mpz_t();
        for (std::size_t i = k + 1; i < d; ++i) {
            mpz_srcptr lead = m(i, k).get_mpz_t();
            for (std::size_t j = k + 1; j < d; ++j) {
                mpz_ptr x = m(i, j).get_mpz_t();
                mpz_mul(x, x, pivot);
                mpz_submul(x, lead, m(k, j).get_mpz_t());
                mpz_divexact(x, x, previous.get_mpz_t());
            }
        }
        for (std::size_t i = k + 1; i < d; ++i) m(i, k) = 0;
        previous = m(k, k);
    }
    bigint det = m(d - 1, d - 1);
    if (sign < 0) det = -det;
    return det;
}

inline void check_oracle_cap(std::size_t dim, const limits& lim, const char* who) {
    if (dim > lim.oracle_max_dim)
        throw resource_limit_error(std::string(who) + ": dim=" + std::to_string(dim) + " exceeds oracle cap " +
                                   std::to_string(lim.oracle_max_dim));
}

/**
 * det(tI - M) by the Faddeev-LeVerrier recursion.
 *
 * With N_0 = 0 and c_d = 1: N_k = M N_{k-1} + c_{d-k+1} I and
 * c_{d-k} = -tr(M N_k) / k. Every division is exact over the integers;
 * a non-exact one throws.
 */
template <class T>
int_polynomial oracle_char_poly(const basic_matrix<T>& input, const limits& lim = {}) {
    check_oracle_cap(input.dim(), lim, "oracle_char_poly");
    const exact_matrix m = convert<bigint>(input);
    const std::size_t d = m.dim();
    std::vector<bigint> c(d + 1, 0);
    c[d] = 1;
    exact_matrix product(d); // M * N_{k-1}
    for (std::size_t k = 1; k <= d; ++k) {
        exact_matrix next = std::move(product);
        for (std::size_t i = 0; i < d; ++i) next(i, i) += c[d - k + 1];
        product = multiply(m, next);
        bigint trace = 0;
        for (std::size_t i = 0; i < d; ++i) trace += product(i, i);
        if (!mpz_divisible_ui_p(trace.get_mpz_t(), k))
            throw std::logic_error("oracle_char_poly: inexact trace division");
        mpz_divexact_ui(c[d - k].get_mpz_t(), trace.get_mpz_t(), k);
        c[d - k] = -c[d - k];
    }
    return int_polynomial(std::move(c));
}

/**
 * det(tI - M) by exact evaluation and interpolation.
 *
 * Evaluates at t = 0..d with Bareiss determinants, takes forward
 * differences, divides the k-th by k! (exact for integer polynomials) and
 * expands the falling-factorial Newton form.
 */
template <class T>
int_polynomial char_poly_by_interpolation(const basic_matrix<T>& input, const limits& lim = {}) {
    check_oracle_cap(input.dim(), lim, "char_poly_by_interpolation");
    const exact_matrix m = convert<bigint>(input);
    const std::size_t d = m.dim();
    std::vector<bigint> diffs(d + 1);
    for (std::size_t x = 0; x <= d; ++x) {
        exact_matrix shifted(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) shifted(i, j) = -m(i, j);
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) += static_cast<unsigned long>(x);
        diffs[x] = oracle_det(shifted);
    }
    // In place: diffs[k] becomes the k-th forward difference at 0.
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t x = d; x >= k; --x) diffs[x] -= diffs[x - 1];
    bigint factorial = 1;
    for (std::size_t k = 0; k <= d; ++k) {
        if (k > 1) factorial *= static_cast<unsigned long>(k);
        if (!mpz_divisible_p(diffs[k].get_mpz_t(), factorial.get_mpz_t()))
            throw std::logic_error("char_poly_by_interpolation: inexact difference division");
        mpz_divexact(diffs[k].get_mpz_t(), diffs[k].get_mpz_t(), factorial.get_mpz_t());
    }
    int_polynomial p = int_polynomial::constant(diffs[d]);
    for (std::size_t k = d; k-- > 0;) {
        p = p * int_polynomial({-bigint(static_cast<unsigned long>(k)), 1});
        p = p + int_polynomial::constant(diffs[k]);
    }
    return p;
}

// --- structural verifiers --------------------------------------------------

namespace detail {

inline unsigned ambient_of(std::size_t dim) { return static_cast<unsigned>(std::countr_zero(dim)); }

template <class T>
std::string entry_witness(const basic_matrix<T>& m, std::size_t i, std::size_t j, bool as_sets = true) {
    std::ostringstream os;
    os << '(' << i + 1 << ',' << j + 1 << ')';
    const std::size_t d = m.dim();
    if (as_sets && std::has_single_bit(d)) {
        const unsigned n = ambient_of(d);
        os << " I=" << to_string(subset_mask{n, i}) << " J=" << to_string(subset_mask{n, j});
    }
    os << " value=" << scalar_traits<T>::to_string(m(i, j));
    return os.str();
}

inline std::string claim_id(const char* base, const std::string& suffix) {
    return suffix.empty() ? std::string(base) : std::string(base) + ":" + suffix;
}

} // namespace detail

/// Zero at every (i, j), 1-based, with i + j <= dim.
template <class T>
verification_outcome verify_anti_triangular(const basic_matrix<T>& m, const std::string& label = "") {
    const auto claim = detail::claim_id("anti-triangular", label);
    const std::size_t d = m.dim();
    const unsigned n = detail::ambient_of(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; i + j + 2 <= d; ++j)
            if (!(m(i, j) == T{0})) return verification_outcome::fail(claim, n, detail::entry_witness(m, i, j));
    return verification_outcome::pass(claim, n);
}

/// Entry at (I, complement of I) equals pi(I) for A, pi'(I) for B.
template <class T>
verification_outcome verify_antidiagonal_values(const basic_matrix<T>& m, family f) {
    const auto claim = detail::claim_id("antidiagonal", to_string(f));
    const std::size_t d = m.dim();
    const unsigned n = detail::ambient_of(d);
    for (std::size_t i = 0; i < d; ++i) {
        const subset_mask s{n, i};
        const std::size_t j = s.complement().bits();
        const auto expected = static_cast<std::int64_t>(f == family::A ? pi(s) : pi_prime(s));
        if (!(m(i, j) == scalar_traits<T>::from_int(expected)))
            return verification_outcome::fail(claim, n,
                                              detail::entry_witness(m, i, j) + " expected=" + std::to_string(expected));
    }
    return verification_outcome::pass(claim, n);
}

/// Every nonzero entry (I, J) has I ~> J.
template <class T>
verification_outcome verify_support(const basic_matrix<T>& m, const std::string& label = "") {
    const auto claim = detail::claim_id("support", label);
    const std::size_t d = m.dim();
    const unsigned n = detail::ambient_of(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!(m(i, j) == T{0}) && !arrow(subset_mask{n, i}, subset_mask{n, j}))
                return verification_outcome::fail(claim, n, detail::entry_witness(m, i, j));
    return verification_outcome::pass(claim, n);
}

/// Lower triangular in 2x2 blocks: above the diagonal only the pairs (2t+1, 2t+2) may be nonzero.
template <class T>
verification_outcome verify_block_form(const basic_matrix<T>& m, const std::string& label = "") {
    const auto claim = detail::claim_id("block-form", label);
    const std::size_t d = m.dim();
    const unsigned n = detail::ambient_of(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            if (i % 2 == 0 && j == i + 1) continue;
            if (!(m(i, j) == T{0}))
                return verification_outcome::fail(claim, n, detail::entry_witness(m, i, j, false));
        }
    return verification_outcome::pass(claim, n);
}

/// Diagonal block t is [[0, pi(I)], [pi(complement I), 0]] with I the odd-position set of pair t.
template <class T>
verification_outcome verify_diagonal_blocks(const basic_matrix<T>& m, family f, const sigma_table& sigma) {
    const auto claim = detail::claim_id("diagonal-blocks", to_string(f));
    const std::size_t d = m.dim();
    const unsigned n = detail::ambient_of(d);
    if (sigma.values.size() != d || d < 2)
        return verification_outcome::fail(claim, n, "table size " + std::to_string(sigma.values.size()) +
                                                        " does not match dim " + std::to_string(d));
    auto weight = [f](subset_mask s) {
        return static_cast<std::int64_t>(f == family::A ? pi(s) : pi_prime(s));
    };
    for (std::size_t r = 0; r < d; r += 2) {
        const auto s = sigma.values[r];
        const std::int64_t expected[2][2] = {{0, weight(s)}, {weight(s.complement()), 0}};
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                if (!(m(r + a, r + b) == scalar_traits<T>::from_int(expected[a][b])))
                    return verification_outcome::fail(claim, n,
                                                      detail::entry_witness(m, r + a, r + b, false) + " block=" +
                                                          std::to_string(r / 2 + 1) + " set=" + to_string(s) +
                                                          " expected=" + std::to_string(expected[a][b]));
    }
    return verification_outcome::pass(claim, n);
}

} // namespace arspec
