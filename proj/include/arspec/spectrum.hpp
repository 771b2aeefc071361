#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "composition.hpp"
#include "matrices.hpp"
#include "polynomial.hpp"
#include "subset.hpp"

namespace arspec {

namespace detail {

// prod (t^2 - c) over the given radicands, built in s = t^2 and spread out at the end.
inline int_polynomial product_of_quadratics(const std::vector<bigint>& radicands) {
    int_polynomial in_s = int_polynomial::constant(1);
    for (const auto& c : radicands) in_s.multiply_binomial(1, c);
    const auto& q = in_s.coeffs();
    std::vector<bigint> t(2 * q.size() - 1, 0);
    for (std::size_t k = 0; k < q.size(); ++k) t[2 * k] = q[k];
    return int_polynomial(std::move(t));
}

inline bigint composition_weight(family f, const composition& mu) {
    const auto w = f == family::A ? composition_pi(mu) : composition_pi_prime(mu);
    return bigint{static_cast<unsigned long>(w)};
}

} // namespace detail

/// det(tI - X_n) as the product over compositions mu of n of (t^2 - pi_mu), pi'_mu for B.
inline int_polynomial char_poly_formula(family f, unsigned n) {
    if (n == 0) return int_polynomial({-1, 1});
    std::vector<bigint> radicands;
    for (const auto& mu : compositions(n)) radicands.push_back(detail::composition_weight(f, mu));
    return detail::product_of_quadratics(radicands);
}

/// The same polynomial read off the 2x2 diagonal blocks: one factor per set I containing 1,
/// with constant term w(I) * w(complement of I).
inline int_polynomial char_poly_blockform(family f, unsigned n) {
    if (n == 0) return int_polynomial({-1, 1});
    if (n > max_ambient) throw std::invalid_argument("char_poly_blockform: n too large");
    auto weight = [f](subset_mask s) { return f == family::A ? pi(s) : pi_prime(s); };
    std::vector<bigint> radicands;
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); b += 2) {
        const subset_mask s{n, b};
        radicands.emplace_back(static_cast<unsigned long>(weight(s) * weight(s.complement())));
    }
    return detail::product_of_quadratics(radicands);
}

/**
 * sqrt(value) rounded half-up to `digits` significant digits, trailing zeros dropped.
 *
 * Works from an integer square root of value * 10^(2e), so the digits are
 * exact rather than inherited from a double.
 */
inline std::string approximate_sqrt(const bigint& value, unsigned digits) {
    if (value < 0) throw std::invalid_argument("approximate_sqrt: negative radicand");
    if (digits == 0) throw std::invalid_argument("approximate_sqrt: need at least one digit");
    if (value == 0) return "0";
    const unsigned extra = digits + 2;
    bigint scaled = value;
    for (unsigned k = 0; k < 2 * extra; ++k) scaled *= 10;
    bigint root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    std::string all = root.get_str();
    // Integer digits of sqrt(value); negative means leading zeros after the point.
    long int_digits = static_cast<long>(all.size()) - static_cast<long>(extra);
    std::string kept = all.substr(0, digits);
    const bool round_up = all.size() > digits && all[digits] >= '5';
    if (round_up) {
        bigint bumped(kept);
        bumped += 1;
        std::string b = bumped.get_str();
        if (b.size() > kept.size()) {
            ++int_digits;
            b.pop_back();
        }
        kept = b;
    }
    std::string out;
    if (int_digits <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-int_digits), '0') + kept;
    } else if (static_cast<std::size_t>(int_digits) >= kept.size()) {
        return kept + std::string(static_cast<std::size_t>(int_digits) - kept.size(), '0');
    } else {
        out = kept.substr(0, static_cast<std::size_t>(int_digits)) + "." +
              kept.substr(static_cast<std::size_t>(int_digits));
    }
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

struct spectrum_record {
    composition mu;
    bigint radicand;
    /// Decimal approximation of sqrt(radicand).
    std::string approximation;
    /// False only for n = 0, where the single eigenvalue is 1 rather than a +/- pair.
    bool paired = true;
};

struct spectrum_report {
    unsigned n = 0;
    family which = family::A;
    std::vector<spectrum_record> records;
    int_polynomial charpoly;

    /// Eigenvalues with multiplicity.
    std::size_t eigenvalue_count() const {
        std::size_t c = 0;
        for (const auto& r : records) c += r.paired ? 2 : 1;
        return c;
    }
};

/// One record per composition, descending radicand, ties by lexicographically smaller composition.
inline spectrum_report spectrum(unsigned n, family f, unsigned digits = 12) {
    spectrum_report rep{n, f, {}, char_poly_formula(f, n)};
    if (n == 0) {
        rep.records.push_back({composition{}, 1, "1", false});
        return rep;
    }
    for (auto& mu : compositions(n)) {
        bigint r = detail::composition_weight(f, mu);
        auto approx = approximate_sqrt(r, digits);
        rep.records.push_back({std::move(mu), std::move(r), std::move(approx), true});
    }
    std::sort(rep.records.begin(), rep.records.end(), [](const spectrum_record& a, const spectrum_record& b) {
        if (a.radicand != b.radicand) return a.radicand > b.radicand;
        return a.mu < b.mu;
    });
    return rep;
}

} // namespace arspec
