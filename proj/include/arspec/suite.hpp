#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matrices.hpp"
#include "oracle.hpp"
#include "sigma.hpp"
#include "spectrum.hpp"
#include "verification.hpp"

namespace arspec {

struct suite_options {
    unsigned n_min = 1;
    unsigned n_max = 6;
    /// Claim family to keep (the part of the id before ':'); empty keeps all.
    std::string only;
    limits lim;
    /// Called on every conjugated matrix before it is checked. Lets tests plant a fault.
    std::function<void(small_matrix&, family, unsigned)> perturb;
};

namespace detail {

inline verification_outcome compare_matrices(const std::string& claim, unsigned n, const small_matrix& a,
                                             const small_matrix& b) {
    if (auto diff = first_difference(a, b))
        return verification_outcome::fail(claim, n, entry_witness(a, diff->first, diff->second) +
                                                        " other=" +
                                                        std::to_string(b(diff->first, diff->second).value()));
    return verification_outcome::pass(claim, n);
}

inline verification_outcome compare_polys(const std::string& claim, unsigned n, const int_polynomial& a,
                                          const int_polynomial& b) {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t k = 0; k < len; ++k)
        if (a.coeff(k) != b.coeff(k))
            return verification_outcome::fail(claim, n, "coeff t^" + std::to_string(k) + " " + a.coeff(k).get_str() +
                                                            " vs " + b.coeff(k).get_str());
    return verification_outcome::pass(claim, n);
}

inline std::string claim_family(const std::string& claim) { return claim.substr(0, claim.find(':')); }

} // namespace detail

/// Runs every structural and oracle-backed check for n in [n_min, n_max].
/// The report callback sees each outcome as soon as it is known.
inline std::vector<verification_outcome> run_verification_suite(
    const suite_options& opt, const std::function<void(const verification_outcome&)>& report = {}) {
    std::vector<verification_outcome> out;
    auto wanted = [&](const std::string& fam) { return opt.only.empty() || opt.only == fam; };
    auto emit = [&](verification_outcome v) {
        if (!wanted(detail::claim_family(v.claim))) return;
        if (report) report(v);
        out.push_back(std::move(v));
    };

    for (unsigned n = opt.n_min; n <= opt.n_max; ++n) {
        check_dense_cap(n, opt.lim, "verify");
        const sigma_table sigma = sigma_recursive(n, opt.lim);

        if (wanted("sigma-ordering")) emit(verify_lemma17(sigma));
        if (wanted("sigma-closed-form")) {
            const auto closed = sigma_closed_form_table(n, opt.lim);
            verification_outcome v = verification_outcome::pass("sigma-closed-form", n);
            for (std::size_t p = 0; p < closed.values.size(); ++p)
                if (closed.values[p] != sigma.values[p]) {
                    v = verification_outcome::fail("sigma-closed-form", n,
                                                   "position " + std::to_string(p + 1) + " recursive=" +
                                                       to_string(sigma.values[p]) + " closed=" +
                                                       to_string(closed.values[p]));
                    break;
                }
            emit(v);
        }
        if (wanted("sigma-words") && n >= 1) {
            verification_outcome v = verification_outcome::pass("sigma-words", n);
            for (unsigned j = 1; j <= n; ++j)
                if (sigma_word(sigma, j) != sigma_word_thue_morse(n, j)) {
                    v = verification_outcome::fail("sigma-words", n, "j=" + std::to_string(j));
                    break;
                }
            emit(v);
        }

        for (family f : {family::A, family::B}) {
            const std::string tag = to_string(f);
            const bool structural = wanted("entrywise") || wanted("conjugation-routes") ||
                                    wanted("anti-triangular") || wanted("antidiagonal") || wanted("support") ||
                                    wanted("block-form") || wanted("diagonal-blocks");
            if (structural) {
                const auto raw = build_recursive<checked_int>(f, n, opt.lim);
                if (wanted("entrywise"))
                    emit(detail::compare_matrices("entrywise:" + tag, n, raw,
                                                  build_entrywise<checked_int>(f, n, opt.lim)));
                auto conj = conjugate_by_zeta(raw);
                if (wanted("conjugation-routes") && dim_of(n) <= opt.lim.oracle_max_dim)
                    emit(detail::compare_matrices(
                        "conjugation-routes:" + tag, n, conj,
                        conjugate(raw, build_zeta<checked_int>(n, opt.lim), build_mobius<checked_int>(n, opt.lim))));
                if (opt.perturb) opt.perturb(conj, f, n);
                if (wanted("anti-triangular")) emit(verify_anti_triangular(conj, tag));
                if (wanted("antidiagonal")) emit(verify_antidiagonal_values(conj, f));
                if (wanted("support")) emit(verify_support(conj, tag));
                if (wanted("block-form") || wanted("diagonal-blocks")) {
                    const auto blocked = permute_conjugate(conj, std::span<const subset_mask>(sigma.values));
                    if (wanted("block-form")) emit(verify_block_form(blocked, tag));
                    if (wanted("diagonal-blocks")) emit(verify_diagonal_blocks(blocked, f, sigma));
                }
            }
            if (wanted("charpoly-blockform"))
                emit(detail::compare_polys("charpoly-blockform:" + tag, n, char_poly_formula(f, n),
                                           char_poly_blockform(f, n)));
            if (wanted("charpoly-oracle") && dim_of(n) <= opt.lim.oracle_max_dim)
                emit(detail::compare_polys("charpoly-oracle:" + tag, n, char_poly_formula(f, n),
                                           oracle_char_poly(build_recursive<bigint>(f, n, opt.lim), opt.lim)));
        }
    }
    return out;
}

/// Claim families known to the suite, for validating filters.
inline const std::vector<std::string>& suite_claim_families() {
    static const std::vector<std::string> names{
        "sigma-ordering", "sigma-closed-form", "sigma-words",   "entrywise",         "conjugation-routes",
        "anti-triangular", "antidiagonal",     "support",       "block-form",        "diagonal-blocks",
        "charpoly-blockform", "charpoly-oracle"};
    return names;
}

} // namespace arspec
