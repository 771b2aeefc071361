#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arspec {

using bigint = mpz_class;

/// Thrown when an exact 64-bit computation would leave the representable range.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/**
 * A 64-bit integer whose arithmetic throws instead of wrapping.
 *
 * Used as the entry type for the large structural scans, where entries stay
 * tiny but a big-integer matrix of 2^24 entries would not fit in memory.
 * Results are either exact or an exception; never silently wrong.
 */
class checked_int {
public:
    constexpr checked_int() = default;
    constexpr checked_int(std::int64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

    constexpr std::int64_t value() const { return v_; }

    checked_int& operator+=(checked_int o) {
        if (__builtin_add_overflow(v_, o.v_, &v_)) throw overflow_error("checked_int: addition overflow");
        return *this;
    }
    checked_int& operator-=(checked_int o) {
        if (__builtin_sub_overflow(v_, o.v_, &v_)) throw overflow_error("checked_int: subtraction overflow");
        return *this;
    }
    checked_int& operator*=(checked_int o) {
        if (__builtin_mul_overflow(v_, o.v_, &v_)) throw overflow_error("checked_int: multiplication overflow");
        return *this;
    }

    friend checked_int operator+(checked_int a, checked_int b) { return a += b; }
    friend checked_int operator-(checked_int a, checked_int b) { return a -= b; }
    friend checked_int operator*(checked_int a, checked_int b) { return a *= b; }
    friend checked_int operator-(checked_int a) { return checked_int{0} - a; }

    friend constexpr bool operator==(checked_int, checked_int) = default;
    friend constexpr auto operator<=>(checked_int, checked_int) = default;

    friend std::ostream& operator<<(std::ostream& os, checked_int x) { return os << x.v_; }

private:
    std::int64_t v_ = 0;
};

/// Conversions used by generic code that must work for every scalar type.
template <class T> struct scalar_traits;

template <> struct scalar_traits<bigint> {
    static bigint from_int(std::int64_t v) { return bigint{static_cast<long>(v)}; }
    static bigint to_bigint(const bigint& v) { return v; }
    static std::int64_t to_int64(const bigint& v) {
        if (!v.fits_slong_p()) throw overflow_error("to_int64: value exceeds 64 bits");
        return v.get_si();
    }
    static std::string to_string(const bigint& v) { return v.get_str(); }
    static bigint parse(std::string_view text) {
        bigint out;
        if (text.empty() || out.set_str(std::string(text), 10) != 0)
            throw std::invalid_argument("parse: not a decimal integer: " + std::string(text));
        return out;
    }
};

template <> struct scalar_traits<checked_int> {
    static checked_int from_int(std::int64_t v) { return v; }
    static bigint to_bigint(checked_int v) { return bigint{static_cast<long>(v.value())}; }
    static std::int64_t to_int64(checked_int v) { return v.value(); }
    static std::string to_string(checked_int v) { return std::to_string(v.value()); }
    static checked_int parse(std::string_view text) {
        std::int64_t v = 0;
        const char* first = text.data();
        if (!text.empty() && text.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
        if (ec == std::errc::result_out_of_range) throw overflow_error("parse: value exceeds 64 bits");
        if (ec != std::errc{} || ptr != text.data() + text.size() || first == ptr)
            throw std::invalid_argument("parse: not a decimal integer: " + std::string(text));
        return v;
    }
};

template <> struct scalar_traits<std::int64_t> {
    static std::int64_t from_int(std::int64_t v) { return v; }
    static bigint to_bigint(std::int64_t v) { return bigint{static_cast<long>(v)}; }
    static std::int64_t to_int64(std::int64_t v) { return v; }
    static std::string to_string(std::int64_t v) { return std::to_string(v); }
    static std::int64_t parse(std::string_view text) { return scalar_traits<checked_int>::parse(text).value(); }
};

template <class T> bigint to_bigint(const T& v) { return scalar_traits<T>::to_bigint(v); }
template <class T> std::int64_t to_int64(const T& v) { return scalar_traits<T>::to_int64(v); }

} // namespace arspec
