#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "subset.hpp"

namespace arspec {

/// Which of the two matrix families.
enum class family { A, B };

inline const char* to_string(family f) { return f == family::A ? "A" : "B"; }

/// Thrown when a request would exceed a configured size cap.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size caps. max_n bounds every dense 2^n x 2^n build; oracle_max_dim bounds the brute-force oracle.
struct limits {
    unsigned max_n = 14;
    std::size_t oracle_max_dim = 64;
};

inline void check_dense_cap(unsigned n, const limits& lim, const char* who) {
    if (n > lim.max_n || n > 30)
        throw resource_limit_error(std::string(who) + ": n=" + std::to_string(n) + " exceeds cap n<=" +
                                   std::to_string(lim.max_n));
}

inline std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

namespace detail {

// Writes sign * X_k into dest at (row0, col0), X the chosen family, by unfolding the block recursion.
template <class T>
void fill_block(basic_matrix<T>& dest, family f, unsigned k, std::size_t row0, std::size_t col0, int sign) {
    if (k == 0) {
        dest(row0, col0) = T{sign};
        return;
    }
    const std::size_t h = dim_of(k - 1);
    fill_block(dest, family::A, k - 1, row0, col0, sign);
    fill_block(dest, family::A, k - 1, row0, col0 + h, sign);
    if (f == family::A) fill_block(dest, family::A, k - 1, row0 + h, col0, sign);
    fill_block(dest, family::B, k - 1, row0 + h, col0 + h, -sign);
}

} // namespace detail

/// A_n or B_n from the block recursion, A_0 = B_0 = (1).
template <class T = bigint>
basic_matrix<T> build_recursive(family f, unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "build_recursive");
    basic_matrix<T> m(dim_of(n));
    detail::fill_block(m, f, n, 0, 0, 1);
    return m;
}

/// Closed-form entry: (-1)^|I & J| when I >> J (and, for B, n not in I \ J); else 0.
inline int entry(family f, subset_mask i, subset_mask j) {
    if (!dominates(i, j)) return 0;
    if (f == family::B && (i - j).contains(i.ambient())) return 0;
    return ((i & j).size() % 2 == 0) ? 1 : -1;
}

template <class T = bigint>
basic_matrix<T> build_entrywise(family f, unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "build_entrywise");
    const std::size_t d = dim_of(n);
    basic_matrix<T> m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = T{entry(f, subset_mask{n, r}, subset_mask{n, c})};
    return m;
}

/// Zeta matrix of the subset lattice: 1 where row set includes column set.
template <class T = bigint>
basic_matrix<T> build_zeta(unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "build_zeta");
    const std::size_t d = dim_of(n);
    basic_matrix<T> m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if ((c & ~r) == 0) m(r, c) = T{1};
    return m;
}

/// Inverse of the zeta matrix: (-1)^|I \ J| where I includes J.
template <class T = bigint>
basic_matrix<T> build_mobius(unsigned n, const limits& lim = {}) {
    check_dense_cap(n, lim, "build_mobius");
    const std::size_t d = dim_of(n);
    basic_matrix<T> m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if ((c & ~r) == 0) m(r, c) = T{(std::popcount(r & ~c) % 2 == 0) ? 1 : -1};
    return m;
}

/// c * m * c_inv by classical products. Does not check that c_inv inverts c.
template <class T>
basic_matrix<T> conjugate(const basic_matrix<T>& m, const basic_matrix<T>& c, const basic_matrix<T>& c_inv) {
    if (m.dim() != c.dim() || m.dim() != c_inv.dim())
        throw std::invalid_argument("conjugate: dimension mismatch");
    return multiply(multiply(c, m), c_inv);
}

/**
 * U_n * m * U_n^{-1} without forming U_n.
 *
 * Left multiplication by the zeta matrix is a subset-sum transform over the
 * row index; right multiplication by its inverse is an alternating
 * superset-difference transform over the column index. O(n 4^n) additions.
 */
template <class T>
basic_matrix<T> conjugate_by_zeta(basic_matrix<T> m) {
    const std::size_t d = m.dim();
    if (d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("conjugate_by_zeta: dim must be a power of two");
    for (std::size_t bit = 1; bit < d; bit <<= 1)
        for (std::size_t r = 0; r < d; ++r)
            if (r & bit) {
                auto dst = m.row(r);
                auto src = m.row(r ^ bit);
                for (std::size_t c = 0; c < d; ++c) dst[c] += src[c];
            }
    for (std::size_t r = 0; r < d; ++r) {
        auto row = m.row(r);
        for (std::size_t bit = 1; bit < d; bit <<= 1)
            for (std::size_t c = 0; c < d; ++c)
                if (!(c & bit)) row[c] -= row[c | bit];
    }
    return m;
}

/// result(i, j) = m(sigma[i], sigma[j]); sigma must list every subset of [n] once.
template <class T>
basic_matrix<T> permute_conjugate(const basic_matrix<T>& m, std::span<const subset_mask> sigma) {
    const std::size_t d = m.dim();
    if (sigma.size() != d) throw std::invalid_argument("permute_conjugate: table size does not match dim");
    std::vector<std::size_t> pos(d);
    std::vector<bool> seen(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        const auto v = sigma[i].bits();
        if (v >= d || seen[v]) throw std::invalid_argument("permute_conjugate: table is not a permutation");
        seen[v] = true;
        pos[i] = v;
    }
    basic_matrix<T> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto src = m.row(pos[i]);
        auto dst = out.row(i);
        for (std::size_t j = 0; j < d; ++j) dst[j] = src[pos[j]];
    }
    return out;
}

namespace detail {

template <class V>
void apply_family(family f, unsigned k, std::span<const V> x, std::span<V> out) {
    if (k == 0) {
        out[0] = x[0];
        return;
    }
    const std::size_t h = dim_of(k - 1);
    const auto x1 = x.first(h);
    const auto x2 = x.subspan(h);
    auto top = out.first(h);
    auto bottom = out.subspan(h);

    std::vector<V> scratch(h);
    for (std::size_t i = 0; i < h; ++i) scratch[i] = x1[i] + x2[i];
    apply_family<V>(family::A, k - 1, scratch, top);

    apply_family<V>(family::B, k - 1, x2, scratch);
    if (f == family::A) {
        apply_family<V>(family::A, k - 1, x1, bottom);
        for (std::size_t i = 0; i < h; ++i) bottom[i] -= scratch[i];
    } else {
        for (std::size_t i = 0; i < h; ++i) bottom[i] = -scratch[i];
    }
}

} // namespace detail

/// A_n * x or B_n * x via the block recursion; the matrix is never formed.
template <class V>
std::vector<V> fast_matvec(family f, unsigned n, std::span<const V> x) {
    if (n > 62 || x.size() != dim_of(n)) throw std::invalid_argument("fast_matvec: vector length must be 2^n");
    std::vector<V> out(x.size());
    detail::apply_family<V>(f, n, x, std::span<V>(out));
    return out;
}

} // namespace arspec
