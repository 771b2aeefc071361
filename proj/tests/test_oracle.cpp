#include <gtest/gtest.h>

#include <random>

#include <arspec/oracle.hpp>
#include <arspec/spectrum.hpp>

using namespace arspec;

namespace {

int_polynomial poly(std::initializer_list<long> ascending) {
    std::vector<bigint> c;
    for (long v : ascending) c.emplace_back(v);
    return int_polynomial(std::move(c));
}

exact_matrix random_ternary(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-1, 1);
    exact_matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = dist(rng);
    return m;
}

small_matrix conjugated(family f, unsigned n) { return conjugate_by_zeta(build_recursive<checked_int>(f, n)); }

} // namespace

TEST(Polynomial, ArithmeticAndFormatting) {
    const auto p = poly({-1, 1}) * poly({1, 1});
    EXPECT_EQ(p, poly({-1, 0, 1}));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(p.evaluate(3), 8);
    EXPECT_EQ(to_string(poly({12, 0, -7, 0, 1})), "t^4 - 7*t^2 + 12");
    EXPECT_EQ(to_string(poly({0, -1})), "-t");
    EXPECT_EQ(to_string(int_polynomial{}), "0");
    EXPECT_EQ(int_polynomial{}.degree(), -1);
    auto q = poly({1});
    q.multiply_binomial(2, 5);
    EXPECT_EQ(q, poly({-5, 0, 1}));
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
}

TEST(OracleCharPoly, HandCases) {
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::A, 1)), poly({-2, 0, 1}));
    EXPECT_EQ(oracle_char_poly(exact_matrix::identity(2)), poly({1, -2, 1}));
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::B, 1)), poly({-1, 0, 1}));
}

TEST(OracleCharPoly, FrozenSmallFamilies) {
    // Expanded independently with a computer algebra system.
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::A, 2)), poly({12, 0, -7, 0, 1}));
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::B, 2)), poly({2, 0, -3, 0, 1}));
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::A, 3)),
              poly({1152, 0, -816, 0, 212, 0, -24, 0, 1}));
    EXPECT_EQ(oracle_char_poly(build_recursive<bigint>(family::B, 3)), poly({24, 0, -50, 0, 35, 0, -10, 0, 1}));
}

TEST(OracleCharPoly, CapEnforced) {
    limits lim;
    lim.oracle_max_dim = 16;
    EXPECT_THROW(oracle_char_poly(build_recursive<bigint>(family::A, 5), lim), resource_limit_error);
    EXPECT_THROW(char_poly_by_interpolation(build_recursive<bigint>(family::A, 5), lim), resource_limit_error);
    EXPECT_NO_THROW(oracle_char_poly(build_recursive<bigint>(family::A, 4), lim));
}

TEST(OracleCharPoly, TwoMethodsAgreeOnFamilies) {
    for (unsigned n = 0; n <= 5; ++n)
        for (family f : {family::A, family::B}) {
            const auto m = build_recursive<bigint>(f, n);
            EXPECT_EQ(oracle_char_poly(m), char_poly_by_interpolation(m)) << n;
        }
}

TEST(OracleCharPoly, TwoMethodsAgreeOnRandomMatrices) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + rng() % 32;
        const auto m = random_ternary(dim, rng);
        const auto leverrier = oracle_char_poly(m);
        ASSERT_EQ(leverrier, char_poly_by_interpolation(m)) << "trial " << trial;
        ASSERT_EQ(leverrier.degree(), static_cast<long>(dim));
        ASSERT_TRUE(leverrier.is_monic());
        bigint det = oracle_det(m);
        if (dim % 2 == 1) det = -det;
        ASSERT_EQ(leverrier.coeff(0), det) << "trial " << trial;
    }
}

TEST(OracleDet, HandCasesAndPivoting) {
    EXPECT_EQ(oracle_det(build_recursive<bigint>(family::A, 1)), -2);
    EXPECT_EQ(oracle_det(build_zeta(5)), 1);
    exact_matrix swap(2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    EXPECT_EQ(oracle_det(swap), -1);
    exact_matrix singular(3);
    singular(0, 0) = 1;
    singular(1, 0) = 2;
    EXPECT_EQ(oracle_det(singular), 0);
}

TEST(Verifiers, AntiTriangular) {
    const auto golden = parse_matrix<checked_int>(to_string(conjugated(family::A, 3)));
    EXPECT_TRUE(verify_anti_triangular(golden));
    const auto raw = verify_anti_triangular(build_recursive<checked_int>(family::A, 3));
    EXPECT_FALSE(raw);
    EXPECT_EQ(raw.witness->substr(0, 5), "(1,1)");
    for (unsigned n = 0; n <= 9; ++n) {
        EXPECT_TRUE(verify_anti_triangular(conjugated(family::A, n))) << n;
        EXPECT_TRUE(verify_anti_triangular(conjugated(family::B, n))) << n;
    }
}

TEST(Verifiers, AntidiagonalValues) {
    const auto a3 = conjugated(family::A, 3);
    std::vector<long> anti;
    for (std::size_t r = 0; r < 8; ++r) anti.push_back(a3(r, 7 - r).value());
    EXPECT_EQ(anti, (std::vector<long>{1, 2, 2, 3, 2, 4, 3, 4}));
    EXPECT_TRUE(verify_antidiagonal_values(a3, family::A));
    EXPECT_FALSE(verify_antidiagonal_values(small_matrix::identity(8), family::A));
    for (unsigned n = 0; n <= 9; ++n) {
        EXPECT_TRUE(verify_antidiagonal_values(conjugated(family::A, n), family::A)) << n;
        EXPECT_TRUE(verify_antidiagonal_values(conjugated(family::B, n), family::B)) << n;
    }
}

TEST(Verifiers, SupportNineElementRow) {
    const auto a9 = conjugated(family::A, 9);
    const auto i = subset_mask::of(9, {1, 2, 3, 6, 7, 9});
    std::vector<std::string> nonzero;
    for (std::size_t j = 0; j < a9.dim(); ++j)
        if (a9(i.bits(), j) != 0) nonzero.push_back(to_string(subset_mask{9, j}));
    std::sort(nonzero.begin(), nonzero.end());
    std::vector<std::string> expected{"{4,5,8}",   "{2,4,5,8}",   "{3,4,5,8}",
                                      "{4,5,7,8}", "{2,4,5,7,8}", "{3,4,5,7,8}"};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(nonzero, expected);
    EXPECT_TRUE(verify_support(a9));
    EXPECT_TRUE(verify_support(small_matrix(16)));
}

TEST(Verifiers, BlockFormAndDiagonalBlocks) {
    const auto sigma = sigma_recursive(3);
    const auto blocked = permute_conjugate(conjugated(family::A, 3), std::span<const subset_mask>(sigma.values));
    EXPECT_TRUE(verify_block_form(blocked));
    EXPECT_TRUE(verify_diagonal_blocks(blocked, family::A, sigma));
    std::vector<long> products;
    for (std::size_t r = 0; r < 8; r += 2) products.push_back(blocked(r, r + 1).value() * blocked(r + 1, r).value());
    EXPECT_EQ(products, (std::vector<long>{8, 6, 6, 4}));

    auto broken = blocked;
    broken(0, 2) = 1;
    const auto v = verify_block_form(broken);
    EXPECT_FALSE(v);
    EXPECT_EQ(v.witness->substr(0, 5), "(1,3)");
    EXPECT_FALSE(verify_diagonal_blocks(small_matrix::identity(8), family::A, sigma));

    for (unsigned n = 1; n <= 9; ++n) {
        const auto s = sigma_recursive(n);
        for (family f : {family::A, family::B}) {
            const auto b = permute_conjugate(conjugated(f, n), std::span<const subset_mask>(s.values));
            EXPECT_TRUE(verify_block_form(b)) << n;
            EXPECT_TRUE(verify_diagonal_blocks(b, f, s)) << n;
        }
    }
}

TEST(Verifiers, SingleEntryMutationsAreCaught) {
    const unsigned n = 4;
    const auto sigma = sigma_recursive(n);
    for (family f : {family::A, family::B}) {
        const auto good = conjugated(f, n);
        const std::string tag = to_string(f);

        auto above = good;
        above(2, 3) = 7; // rows 3, col 4: 3 + 4 <= 16
        auto v = verify_anti_triangular(above, tag);
        ASSERT_FALSE(v);
        EXPECT_EQ(v.witness->substr(0, 5), "(3,4)");
        EXPECT_NE(v.witness->find("value=7"), std::string::npos);

        auto anti = good;
        anti(5, 10) += 1; // {1,3} against its complement {2,4}
        v = verify_antidiagonal_values(anti, f);
        ASSERT_FALSE(v);
        EXPECT_NE(v.witness->find("I={1,3} J={2,4}"), std::string::npos) << *v.witness;

        auto support = good;
        support(15, 15) = 1; // [4] does not reach itself
        v = verify_support(support, tag);
        ASSERT_FALSE(v);
        EXPECT_NE(v.witness->find("(16,16)"), std::string::npos);

        auto blocked = permute_conjugate(good, std::span<const subset_mask>(sigma.values));
        auto upper = blocked;
        upper(4, 9) = -2;
        v = verify_block_form(upper, tag);
        ASSERT_FALSE(v);
        EXPECT_EQ(v.witness->substr(0, 6), "(5,10)");

        auto diag = blocked;
        diag(6, 7) += 1;
        v = verify_diagonal_blocks(diag, f, sigma);
        ASSERT_FALSE(v);
        EXPECT_NE(v.witness->find("block=4"), std::string::npos) << *v.witness;
    }
}

TEST(Verifiers, OutcomeLineFormat) {
    EXPECT_EQ(to_string(verification_outcome::pass("support:A", 3)), "CLAIM support:A n=3 PASS");
    EXPECT_EQ(to_string(verification_outcome::fail("support:A", 3, "(1,1)")),
              "CLAIM support:A n=3 FAIL witness=(1,1)");
}
