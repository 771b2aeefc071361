#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace arspec {

/**
 * Dense square matrix, row-major.
 *
 * Indices are 0-based; for the 2^n x 2^n matrices in this library row i
 * belongs to the subset whose mask value is i (that is, r_index - 1).
 */
template <class T>
class basic_matrix {
public:
    using value_type = T;

    basic_matrix() = default;
    explicit basic_matrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{0}) {}

    static basic_matrix identity(std::size_t dim) {
        basic_matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t dim() const { return dim_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    friend bool operator==(const basic_matrix& a, const basic_matrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<T> data_;
};

using exact_matrix = basic_matrix<bigint>;
using small_matrix = basic_matrix<checked_int>;

/// Entry-by-entry conversion between scalar types.
template <class To, class From>
basic_matrix<To> convert(const basic_matrix<From>& m) {
    basic_matrix<To> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if constexpr (std::is_same_v<To, bigint>)
                out(i, j) = to_bigint(m(i, j));
            else
                out(i, j) = scalar_traits<To>::from_int(to_int64(m(i, j)));
        }
    return out;
}

/// Classical cubic product.
template <class T>
basic_matrix<T> multiply(const basic_matrix<T>& a, const basic_matrix<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
    const std::size_t d = a.dim();
    basic_matrix<T> out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const T& aik = a(i, k);
            if (aik == T{0}) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

/// Plain dense product m * x, every entry touched.
template <class T, class V>
std::vector<V> multiply(const basic_matrix<T>& m, std::span<const V> x) {
    if (x.size() != m.dim()) throw std::invalid_argument("multiply: vector length mismatch");
    std::vector<V> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        V acc{0};
        const auto r = m.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if constexpr (std::is_same_v<V, bigint> && !std::is_same_v<T, bigint>)
                acc += x[j] * static_cast<long>(to_int64(r[j]));
            else
                acc += x[j] * r[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

/// First position where the matrices differ, if any.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const basic_matrix<T>& a,
                                                                   const basic_matrix<T>& b) {
    if (a.dim() != b.dim()) return std::pair<std::size_t, std::size_t>{0, 0};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(a(i, j) == b(i, j))) return std::pair{i, j};
    return std::nullopt;
}

// Text format: `dim=<d>` then d lines of d space-separated decimal integers.

template <class T>
void write_matrix(std::ostream& os, const basic_matrix<T>& m) {
    os << "dim=" << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) os << ' ';
            os << scalar_traits<T>::to_string(m(i, j));
        }
        os << '\n';
    }
}

template <class T>
std::string to_string(const basic_matrix<T>& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

template <class T>
basic_matrix<T> read_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("dim=", 0) != 0)
        throw std::invalid_argument("read_matrix: missing dim= header");
    std::size_t dim = 0;
    try {
        std::size_t used = 0;
        dim = std::stoul(header.substr(4), &used);
        if (used != header.size() - 4) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("read_matrix: bad dim= header");
    }
    if (dim == 0) throw std::invalid_argument("read_matrix: dim must be positive");
    basic_matrix<T> m(dim);
    std::string line;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!std::getline(is, line)) throw std::invalid_argument("read_matrix: missing row");
        std::istringstream row(line);
        std::string token;
        std::size_t j = 0;
        while (row >> token) {
            if (j == dim) throw std::invalid_argument("read_matrix: row too long");
            m(i, j++) = scalar_traits<T>::parse(token);
        }
        if (j != dim) throw std::invalid_argument("read_matrix: row too short");
    }
    return m;
}

template <class T>
basic_matrix<T> parse_matrix(const std::string& text) {
    std::istringstream is(text);
    return read_matrix<T>(is);
}

} // namespace arspec
