#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "integer.hpp"

namespace arspec {

/// Univariate polynomial over big integers; coeffs[k] multiplies t^k.
class int_polynomial {
public:
    int_polynomial() = default;
    explicit int_polynomial(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static int_polynomial constant(const bigint& c) { return int_polynomial({c}); }
    static int_polynomial monomial(std::size_t degree) {
        std::vector<bigint> c(degree + 1, 0);
        c[degree] = 1;
        return int_polynomial(std::move(c));
    }

    const std::vector<bigint>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    bigint coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : bigint{0}; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    bigint evaluate(const bigint& x) const {
        bigint acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend int_polynomial operator*(const int_polynomial& a, const int_polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
        return int_polynomial(std::move(out));
    }

    friend int_polynomial operator+(const int_polynomial& a, const int_polynomial& b) {
        std::vector<bigint> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return int_polynomial(std::move(out));
    }

    /// In-place multiplication by (t^step - c), the shape of every factor in a characteristic polynomial here.
    void multiply_binomial(std::size_t step, const bigint& c) {
        if (is_zero()) return;
        std::vector<bigint> out(coeffs_.size() + step, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i + step] += coeffs_[i];
            mpz_submul(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
        }
        coeffs_ = std::move(out);
        normalize();
    }

    friend bool operator==(const int_polynomial&, const int_polynomial&) = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<bigint> coeffs_;
};

/// Human-readable form, highest degree first, e.g. `t^4 - 7*t^2 + 12`.
inline std::string to_string(const int_polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        bigint c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (c == 1);
        if (!unit || k == 0) out += c.get_str();
        if (k > 0) {
            if (!unit) out += '*';
            out += 't';
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out;
}

} // namespace arspec
