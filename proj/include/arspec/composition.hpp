#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "subset.hpp"

namespace arspec {

/// An ordered sequence of positive parts. The composition of 0 is empty.
struct composition {
    std::vector<unsigned> parts;

    unsigned total() const {
        unsigned s = 0;
        for (unsigned p : parts) s += p;
        return s;
    }

    friend bool operator==(const composition&, const composition&) = default;
    friend auto operator<=>(const composition& a, const composition& b) {
        return a.parts <=> b.parts;
    }
};

/// (mu_1 + 1) * ... * (mu_t + 1).
inline std::uint64_t composition_pi(const composition& mu) {
    std::uint64_t p = 1;
    for (unsigned part : mu.parts) p *= part + 1;
    return p;
}

/// Same product with the last part left out.
inline std::uint64_t composition_pi_prime(const composition& mu) {
    std::uint64_t p = 1;
    for (std::size_t k = 0; k + 1 < mu.parts.size(); ++k) p *= mu.parts[k] + 1;
    return p;
}

/// Interleaves run lengths of I and of its complement, starting with I's first run.
inline composition mu_of_set(subset_mask i) {
    if (i.ambient() == 0 || !i.contains(1))
        throw std::invalid_argument("mu_of_set: the set must contain 1");
    const auto own = runs(i);
    const auto other = runs(i.complement());
    composition mu;
    mu.parts.reserve(own.size() + other.size());
    for (std::size_t k = 0; k < own.size(); ++k) {
        mu.parts.push_back(own[k].length());
        if (k < other.size()) mu.parts.push_back(other[k].length());
    }
    return mu;
}

/// Every composition of n once, ordered by mu_of_set over ascending sets containing 1.
inline std::vector<composition> compositions(unsigned n) {
    if (n == 0) return {composition{}};
    if (n > max_ambient) throw std::invalid_argument("compositions: n too large");
    std::vector<composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < count; bits += 2)
        out.push_back(mu_of_set(subset_mask{n, bits}));
    return out;
}

/// `(1,2,2,3)`; `()` for the empty composition.
inline std::string to_string(const composition& mu) {
    std::string out = "(";
    for (std::size_t k = 0; k < mu.parts.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(mu.parts[k]);
    }
    out += ')';
    return out;
}

} // namespace arspec
