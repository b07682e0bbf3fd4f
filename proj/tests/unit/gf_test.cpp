#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/gf.hpp"

namespace tc = tracecodes;
using tc::gf::Index;

namespace {

struct FieldCase {
    unsigned p, k;
};

class FieldOracle : public ::testing::TestWithParam<FieldCase> {};

TEST_P(FieldOracle, ModulusIsLexSmallestIrreducible) {
    const auto [p, k] = GetParam();
    auto F = tc::gf::build_field(p, k);
    const oracle::Poly expected = oracle::smallest_irreducible(p, k);
    EXPECT_EQ(F->modulus(), expected);
}

TEST_P(FieldOracle, GeneratorIsSmallestPrimitive) {
    const auto [p, k] = GetParam();
    auto F = tc::gf::build_field(p, k);
    EXPECT_EQ(F->generator(), oracle::smallest_primitive(oracle::smallest_irreducible(p, k), p));
}

TEST_P(FieldOracle, TableArithmeticMatchesPolynomialArithmetic) {
    const auto [p, k] = GetParam();
    auto F = tc::gf::build_field(p, k);
    const oracle::Poly mod(F->modulus().begin(), F->modulus().end());
    const Index step = F->order() > 128 ? 7 : 1;
    for (Index x = 0; x < F->order(); x += step)
        for (Index y = 0; y < F->order(); ++y) {
            ASSERT_EQ(F->add(x, y), F->add_reference(x, y));
            const auto prod = oracle::poly_mulmod(oracle::poly_from_index(x, p, k), oracle::poly_from_index(y, p, k), mod, p);
            ASSERT_EQ(F->mul(x, y), oracle::poly_to_index(prod, p)) << x << "*" << y;
        }
}

TEST_P(FieldOracle, AbsoluteTraceMatchesFrobeniusSum) {
    const auto [p, k] = GetParam();
    auto F = tc::gf::build_field(p, k);
    for (Index x = 0; x < F->order(); ++x) ASSERT_EQ(F->absolute_trace(x), oracle::absolute_trace(*F, x));
}

TEST_P(FieldOracle, LogExpRoundTrip) {
    const auto [p, k] = GetParam();
    auto F = tc::gf::build_field(p, k);
    for (Index x = 1; x < F->order(); ++x) {
        ASSERT_EQ(F->exp(F->log(x)), x);
        ASSERT_EQ(F->mul(x, F->inv(x)), 1u);
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldOracle,
                         ::testing::Values(FieldCase{2, 1}, FieldCase{2, 3}, FieldCase{2, 6}, FieldCase{3, 2},
                                           FieldCase{3, 4}, FieldCase{5, 1}, FieldCase{5, 4}, FieldCase{7, 3},
                                           FieldCase{13, 2}),
                         [](const auto& info) {
                             return "p" + std::to_string(info.param.p) + "k" + std::to_string(info.param.k);
                         });

TEST(Field, NineElementsDiscreteLogOfTwo) {
    auto F = tc::gf::build_field(3, 2);
    EXPECT_EQ(F->from_int(2), 2u);
    EXPECT_EQ(F->log(2), 4u);
}

TEST(Field, IndexEncodesCoefficientsLittleEndian) {
    auto F = tc::gf::build_field(5, 3);
    const std::vector<std::uint32_t> c{3, 0, 2};
    EXPECT_EQ(F->from_coeffs(c), 3u + 2u * 25u);
    EXPECT_EQ(F->coeffs(53), c);
}

TEST(Field, ElementsOfDifferentFieldsDoNotMix) {
    auto F = tc::gf::build_field(3, 2);
    auto G = tc::gf::build_field(3, 2);
    EXPECT_THROW((void)(F->one() + G->one()), tc::FieldMismatch);
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(tc::gf::build_field(4, 1), tc::InvalidArgument);
    EXPECT_THROW(tc::gf::build_field(2, 0), tc::InvalidArgument);
    EXPECT_THROW(tc::gf::build_field(2, 30), tc::InvalidArgument);
    auto F = tc::gf::build_field(2, 3);
    EXPECT_THROW((void)tc::gf::inv(F->zero()), tc::ArithmeticError);
}

TEST(Field, SubfieldTraceLandsInSubfield) {
    auto F = tc::gf::build_field(2, 6);
    for (unsigned d : {1u, 2u, 3u})
        for (Index x = 0; x < F->order(); ++x) ASSERT_TRUE(F->is_in_subfield(F->subfield_trace(x, d), d));
    EXPECT_THROW((void)F->subfield_trace(1, 4), tc::InvalidArgument);
}

TEST(Field, IrreducibilityAgreesWithTrialDivision) {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned k = 1; k <= 4; ++k) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < k; ++i) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                auto poly = oracle::poly_from_index(idx, p, k);
                poly.push_back(1);
                ASSERT_EQ(tc::gf::is_irreducible(poly, p), oracle::irreducible_by_trial_division(poly, p));
            }
        }
}

}  // namespace
