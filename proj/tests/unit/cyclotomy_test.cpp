#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/errors.hpp"

namespace tc = tracecodes;
namespace cy = tracecodes::cyclo;
using cy::BigInt;
using cy::CyclotomicInteger;

namespace {

std::vector<std::int64_t> as_ints(const std::vector<BigInt>& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
    return out;
}

TEST(CyclotomicInteger, ZetaPowersSumToZero) {
    CyclotomicInteger acc(7);
    for (unsigned j = 0; j < 7; ++j) acc += CyclotomicInteger::zeta_power(7, j);
    EXPECT_EQ(acc, CyclotomicInteger(7));
    EXPECT_TRUE(acc.is_rational());
}

TEST(CyclotomicInteger, ProductMatchesComplexValue) {
    const auto x = CyclotomicInteger::zeta_power(5, 2) + CyclotomicInteger::rational(5, 3);
    const auto y = CyclotomicInteger::zeta_power(5, 4) * BigInt(-2);
    const auto z = x * y;
    EXPECT_LT(std::abs(z.to_complex() - x.to_complex() * y.to_complex()), 1e-12);
    EXPECT_THROW((void)z.rational_value(), tc::ArithmeticError);
    EXPECT_THROW((void)(x + CyclotomicInteger(7)), tc::InvalidArgument);
}

struct PeriodCase {
    unsigned p, k;
    std::uint64_t N;
};

class PeriodOracle : public ::testing::TestWithParam<PeriodCase> {};

TEST_P(PeriodOracle, ExactPeriodsMatchNumericSums) {
    const auto [p, k, N] = GetParam();
    auto F = tc::gf::build_field(p, k);
    const auto exact = cy::gaussian_periods(*F, N);
    const auto numeric = oracle::numeric_periods(*F, N);
    ASSERT_EQ(exact.size(), N);
    CyclotomicInteger sum(p);
    for (std::uint64_t i = 0; i < N; ++i) {
        EXPECT_LT(std::abs(exact[i].to_complex() - numeric[i]), 1e-6) << "class " << i;
        EXPECT_EQ(exact[i], cy::gaussian_period_exact(*F, N, i));
        sum += exact[i];
    }
    EXPECT_EQ(sum, CyclotomicInteger::rational(p, -1));
}

TEST_P(PeriodOracle, PolynomialVanishesAtEveryPeriod) {
    const auto [p, k, N] = GetParam();
    auto F = tc::gf::build_field(p, k);
    const auto poly = cy::period_polynomial(*F, N);
    ASSERT_EQ(poly.coeffs.size(), N + 1);
    EXPECT_EQ(poly.coeffs[N], 1);
    EXPECT_EQ(poly.coeffs[N - 1], 1);
    for (const auto& eta : cy::gaussian_periods(*F, N)) EXPECT_EQ(poly.evaluate(eta), CyclotomicInteger(p));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, PeriodOracle,
                         ::testing::Values(PeriodCase{3, 2, 2}, PeriodCase{5, 1, 2}, PeriodCase{7, 1, 3},
                                           PeriodCase{2, 6, 3}, PeriodCase{5, 2, 4}, PeriodCase{13, 1, 4},
                                           PeriodCase{3, 4, 4}, PeriodCase{7, 3, 3}, PeriodCase{2, 4, 5}),
                         [](const auto& info) {
                             return "p" + std::to_string(info.param.p) + "k" + std::to_string(info.param.k) + "N" +
                                    std::to_string(info.param.N);
                         });

TEST(PeriodPolynomial, KnownCoefficients) {
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(3, 2), 2).coeffs), (std::vector<std::int64_t>{-2, 1, 1}));
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(2, 6), 3).coeffs),
              (std::vector<std::int64_t>{-45, -21, 1, 1}));
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(7, 3), 3).coeffs),
              (std::vector<std::int64_t>{216, -114, 1, 1}));
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(5, 4), 4).coeffs),
              (std::vector<std::int64_t>{896, -664, -234, 1, 1}));
}

TEST(PeriodPolynomial, LemmaFormulasAgreeWithExpansion) {
    // 4 * 7 = 1 + 27, 4 * 13 = 25 + 27, 4 * 64 = 16^2
    EXPECT_EQ(cy::cubic_period_polynomial_formula(7, 1), cy::period_polynomial(*tc::gf::build_field(7, 1), 3));
    EXPECT_EQ(cy::cubic_period_polynomial_formula(13, -5), cy::period_polynomial(*tc::gf::build_field(13, 1), 3));
    EXPECT_EQ(cy::cubic_period_polynomial_formula(64, 16), cy::period_polynomial(*tc::gf::build_field(2, 6), 3));
    // 13 = 9 + 4, 17 = 1 + 16, 625 = 49 + 576
    EXPECT_EQ(cy::quartic_period_polynomial_formula(13, -3), cy::period_polynomial(*tc::gf::build_field(13, 1), 4));
    EXPECT_EQ(cy::quartic_period_polynomial_formula(17, 1), cy::period_polynomial(*tc::gf::build_field(17, 1), 4));
    EXPECT_EQ(cy::quartic_period_polynomial_formula(625, -7), cy::period_polynomial(*tc::gf::build_field(5, 4), 4));
}

TEST(PeriodPolynomial, IntegerRootsWithMultiplicity) {
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(2, 6), 3).integer_roots()),
              (std::vector<std::int64_t>{-3, -3, 5}));
    EXPECT_EQ(as_ints(cy::period_polynomial(*tc::gf::build_field(3, 4), 4).integer_roots()),
              (std::vector<std::int64_t>{-7, 2, 2, 2}));
    EXPECT_TRUE(cy::period_polynomial(*tc::gf::build_field(7, 1), 3).integer_roots().empty());
}

TEST(GaussSum, QuadraticExactSquaresToSignedQ) {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        auto F = tc::gf::build_field(p, k);
        const auto g = cy::quadratic_gauss_sum_exact(*F);
        const std::int64_t q = F->order();
        const std::int64_t sign = ((p % 4 == 3) && (k % 2 == 1)) ? -1 : 1;
        EXPECT_EQ(g * g, CyclotomicInteger::rational(p, sign * q)) << p << "^" << k;
        EXPECT_LT(std::abs(g.to_complex() - cy::quadratic_gauss_sum_closed_form(*F)), 1e-9);
    }
}

TEST(GaussSum, NontrivialCharactersHaveModulusRootQ) {
    auto F = tc::gf::build_field(3, 3);
    for (std::uint64_t j = 1; j < 26; ++j) EXPECT_NEAR(std::abs(cy::gauss_sum_numeric(*F, j)), std::sqrt(27.0), 1e-9);
    EXPECT_NEAR(std::abs(cy::gauss_sum_numeric(*F, 0) + 1.0), 0.0, 1e-9);
}

TEST(GaussSum, QuadraticPolynomialSumIdentity) {
    auto F = tc::gf::build_field(5, 2);
    for (tc::gf::Index a2 = 1; a2 < 25; a2 += 4)
        for (tc::gf::Index a1 = 0; a1 < 25; a1 += 3)
            for (tc::gf::Index a0 = 0; a0 < 25; a0 += 6) ASSERT_TRUE(cy::quadratic_sum_identity_check(*F, a2, a1, a0));
    auto B = tc::gf::build_field(2, 3);
    EXPECT_THROW((void)cy::quadratic_sum_identity(*B, 1, 0, 0), tc::InvalidArgument);
}

TEST(ClosedForm, QuadraticPeriods) {
    const auto c9 = cy::closed_form_periods(*tc::gf::build_field(3, 2), 1, 2);
    EXPECT_TRUE(c9.rational);
    EXPECT_TRUE(c9.matches_exact);
    const auto c5 = cy::closed_form_periods(*tc::gf::build_field(5, 1), 1, 2);
    EXPECT_FALSE(c5.rational);
    EXPECT_EQ(c5.surd_roots.size(), 2u);
    EXPECT_TRUE(c5.matches_exact);
}

TEST(ClosedForm, CubicAndQuarticCasesMatchExactPeriods) {
    for (auto [p, k, N] : std::vector<PeriodCase>{{2, 6, 3}, {7, 3, 3}, {2, 2, 3}, {5, 2, 3}, {5, 4, 4}, {3, 4, 4},
                                                  {3, 2, 4}, {13, 2, 4}, {5, 2, 4}}) {
        const auto cf = cy::closed_form_periods(*tc::gf::build_field(p, k), 1, N);
        EXPECT_TRUE(cf.matches_exact) << p << "^" << k << " N=" << N << " " << cf.case_label;
    }
}

TEST(ClosedForm, IrreducibleCasesAreRejected) {
    EXPECT_THROW((void)cy::closed_form_periods(*tc::gf::build_field(7, 1), 1, 3), tc::CaseMismatch);
    EXPECT_THROW((void)cy::closed_form_periods(*tc::gf::build_field(13, 1), 1, 4), tc::CaseMismatch);
}

TEST(ClosedForm, LiteralReadingDivergesWhenBaseFieldIsLarger) {
    const auto cf = cy::closed_form_periods(*tc::gf::build_field(7, 6), 2, 3);
    EXPECT_EQ(cf.reading.rfind("r-scaled", 0), 0u);
    EXPECT_TRUE(cf.matches_exact);
    EXPECT_TRUE(cf.readings_diverge);
}

TEST(MultisetLemma, HoldsForSmallParameters) {
    EXPECT_TRUE(cy::multiset_product_check(*tc::gf::build_field(2, 6), 2, 3));
    EXPECT_TRUE(cy::multiset_product_check(*tc::gf::build_field(3, 2), 1, 2));
    EXPECT_TRUE(cy::multiset_product_check(*tc::gf::build_field(5, 4), 1, 4));
}

TEST(Theta, AllZeroVectorGivesItsLength) {
    auto F = tc::gf::build_field(3, 1);
    const std::vector<tc::gf::Index> y(5, 0);
    EXPECT_EQ(cy::theta(*F, y), CyclotomicInteger::rational(3, 5));
}

}  // namespace
