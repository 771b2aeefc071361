// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <arspec/arspec.hpp>

#include "brute.hpp"

using namespace arspec;

namespace {

// Pinned tolerances. Every comparison below is exact except the timing bar.
constexpr unsigned golden_n = 3;
constexpr unsigned oracle_n_max = 6;
constexpr unsigned eval_points = 5;
constexpr unsigned structural_n_max = 12;
constexpr unsigned sigma_n_max = 14;
constexpr unsigned lemma_scan_n_max = 10;
constexpr unsigned entrywise_n_max = 10;
constexpr unsigned combinatorics_n_max = 12;
constexpr unsigned matvec_n_max = 12;
constexpr unsigned matvec_vectors = 100;
constexpr unsigned matvec_bits = 128;
constexpr double matvec_speedup_min = 2.0;

struct check_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failed(what);
}

void require(const verification_outcome& v) {
    if (!v) throw check_failed(to_string(v));
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(ARSPEC_FIXTURE_DIR) + "/" + name);
    if (!in) throw check_failed("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

small_matrix conjugated(family f, unsigned n) { return conjugate_by_zeta(build_recursive<checked_int>(f, n)); }

std::string golden() {
    const auto a = build_recursive<bigint>(family::A, golden_n);
    const auto conj = conjugate(a, build_zeta(golden_n), build_mobius(golden_n));
    require(to_string(conj) == fixture("conjugated_A3.txt"), "conjugated A_3 differs from the fixture");
    const auto sigma = sigma_recursive(golden_n);
    const auto blocked = permute_conjugate(conj, std::span<const subset_mask>(sigma.values));
    require(to_string(blocked) == fixture("blocked_A3.txt"), "blocked A_3 differs from the fixture");
    return "both 8x8 displays bit-exact";
}

std::string charpoly_oracle() {
    for (unsigned n = 1; n <= oracle_n_max; ++n)
        for (family f : {family::A, family::B}) {
            const auto formula = char_poly_formula(f, n);
            const auto oracle = oracle_char_poly(build_recursive<bigint>(f, n));
            require(formula == oracle, "n=" + std::to_string(n) + " " + to_string(f) + ": formula " +
                                           to_string(formula) + " oracle " + to_string(oracle));
            require(formula.coeffs().size() == dim_of(n) + 1, "coefficient count");
        }
    return "n=1.." + std::to_string(oracle_n_max) + " A and B, all coefficients equal";
}

std::string evaluation() {
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<std::int64_t> dist(std::numeric_limits<std::int32_t>::min(),
                                                     std::numeric_limits<std::int32_t>::max());
    for (unsigned n : {7u, 8u}) {
        const auto a = build_recursive<bigint>(family::A, n);
        const auto p = char_poly_formula(family::A, n);
        for (unsigned k = 0; k < eval_points; ++k) {
            const bigint x0 = static_cast<long>(dist(rng));
            exact_matrix shifted(a.dim());
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < a.dim(); ++j) shifted(i, j) = (i == j ? x0 : bigint{0}) - a(i, j);
            require(p.evaluate(x0) == oracle_det(shifted), "n=" + std::to_string(n) + " x0=" + x0.get_str());
        }
    }
    return "n=7,8 at 5 random 32-bit points each";
}

std::string structural() {
    for (unsigned n = 0; n <= structural_n_max; ++n) {
        const auto sigma = sigma_recursive(n);
        for (family f : {family::A, family::B}) {
            const std::string tag = to_string(f);
            auto m = conjugated(f, n);
            require(verify_anti_triangular(m, tag));
            require(verify_antidiagonal_values(m, f));
            require(verify_support(m, tag));
            if (n == 0) continue;
            m = permute_conjugate(m, std::span<const subset_mask>(sigma.values));
            require(verify_block_form(m, tag));
            require(verify_diagonal_blocks(m, f, sigma));
        }
    }
    return "n=0.." + std::to_string(structural_n_max) + " exhaustive, A and B";
}

std::string permutation() {
    for (unsigned n = 0; n <= sigma_n_max; ++n) {
        const auto rec = sigma_recursive(n);
        for (std::uint64_t b = 0; b < dim_of(n); ++b)
            require(sigma_closed_form(n, {n, b}) == rec.values[b], "closed form n=" + std::to_string(n));
        if (n <= lemma_scan_n_max) require(verify_lemma17(rec));
        for (unsigned j = 1; j <= n; ++j)
            require(sigma_word(rec, j) == sigma_word_thue_morse(n, j),
                    "membership word n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
    require(to_string(sigma_recursive(3)) == fixture("sigma3.txt"), "three-element table differs from fixture");
    return "closed form and words n<=14, ordering scan n<=10, table byte-exact";
}

std::string entrywise() {
    for (unsigned n = 0; n <= entrywise_n_max; ++n)
        for (family f : {family::A, family::B})
            require(build_entrywise<checked_int>(f, n) == build_recursive<checked_int>(f, n),
                    "n=" + std::to_string(n) + " " + to_string(f));
    return "n=0.." + std::to_string(entrywise_n_max) + " identical";
}

std::string combinatorial() {
    for (unsigned n = 1; n <= combinatorics_n_max; ++n) {
        const auto expected = brute::compositions(n);
        require(expected.size() == dim_of(n - 1), "brute composition count");
        std::set<std::vector<unsigned>> seen;
        for (std::uint64_t b = 1; b < dim_of(n); b += 2) {
            const subset_mask s{n, b};
            const auto mu = mu_of_set(s);
            require(mu.total() == n, "mu total");
            require(seen.insert(mu.parts).second, "mu not injective at " + to_string(s));
            const auto bs = brute::from_bits(b, n);
            const auto bc = brute::complement(bs, n);
            require(composition_pi(mu) == brute::pi(bs) * brute::pi(bc), "pi identity at " + to_string(s));
            require(composition_pi_prime(mu) == brute::pi_prime(bs, n) * brute::pi_prime(bc, n),
                    "pi' identity at " + to_string(s));
        }
        require(seen == expected, "mu image differs from all compositions at n=" + std::to_string(n));
        const auto listed = compositions(n);
        require(listed.size() == dim_of(n - 1), "composition count at n=" + std::to_string(n));
    }
    return "n=1.." + std::to_string(combinatorics_n_max) + " exhaustive";
}

std::string matvec() {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(8675309);
    double dense_time = 0, fast_time = 0;
    using clock = std::chrono::steady_clock;
    for (unsigned n = 0; n <= matvec_n_max; ++n)
        for (family f : {family::A, family::B}) {
            const auto dense = build_recursive<checked_int>(f, n);
            for (unsigned t = 0; t < matvec_vectors; ++t) {
                std::vector<bigint> x(dim_of(n));
                for (auto& v : x) v = rng.get_z_bits(matvec_bits) - (bigint{1} << (matvec_bits - 1));
                const auto t0 = clock::now();
                const auto fast = fast_matvec<bigint>(f, n, x);
                const auto t1 = clock::now();
                const auto slow = multiply(dense, std::span<const bigint>(x));
                const auto t2 = clock::now();
                require(fast == slow, "n=" + std::to_string(n) + " " + to_string(f) + " vector " + std::to_string(t));
                if (n == matvec_n_max) {
                    fast_time += std::chrono::duration<double>(t1 - t0).count();
                    dense_time += std::chrono::duration<double>(t2 - t1).count();
                }
            }
        }
    const double speedup = dense_time / fast_time;
    std::ostringstream os;
    os.precision(3);
    os << "n<=12 agree; n=12 dense " << dense_time << "s fast " << fast_time << "s speedup " << speedup << "x";
    require(speedup >= matvec_speedup_min, os.str());
    return os.str();
}

std::string negative_controls() {
    const unsigned n = 4;
    const auto sigma = sigma_recursive(n);
    auto expect_caught = [](const verification_outcome& v, const std::string& marker) {
        require(!v.passed && v.witness && v.witness->find(marker) != std::string::npos,
                "mutation not caught with witness " + marker + ": " + to_string(v));
    };
    for (family f : {family::A, family::B}) {
        const std::string tag = to_string(f);
        const auto good = conjugated(f, n);
        const auto blocked = permute_conjugate(good, std::span<const subset_mask>(sigma.values));

        auto m = good;
        m(2, 3) = 7;
        expect_caught(verify_anti_triangular(m, tag), "(3,4)");
        m = good;
        m(5, 10) += checked_int{1};
        expect_caught(verify_antidiagonal_values(m, f), "(6,11)");
        m = good;
        m(15, 15) = 1;
        expect_caught(verify_support(m, tag), "(16,16)");
        m = blocked;
        m(4, 9) = -2;
        expect_caught(verify_block_form(m, tag), "(5,10)");
        m = blocked;
        m(6, 7) += checked_int{1};
        expect_caught(verify_diagonal_blocks(m, f, sigma), "(7,8)");
    }
    auto table = sigma_recursive(3);
    std::swap(table.values[0], table.values[2]);
    std::swap(table.values[1], table.values[3]);
    expect_caught(verify_lemma17(table), "i=");
    return "5 matrix verifiers x 2 families plus the ordering check";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"golden fixtures", golden},
        {"char poly formula = oracle", charpoly_oracle},
        {"evaluation extension", evaluation},
        {"structural suite", structural},
        {"permutation suite", permutation},
        {"entrywise = recursive", entrywise},
        {"combinatorial identities", combinatorial},
        {"fast matvec", matvec},
        {"negative controls", negative_controls},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string status = "PASS", detail;
        try {
            detail = criteria[k].second();
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = e.what();
            ++failures;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "CRITERION " << k + 1 << " " << status << " " << criteria[k].first << ": " << detail << " ["
                  << static_cast<long>(secs * 1000) << " ms]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
