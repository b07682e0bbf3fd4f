#include <gtest/gtest.h>

#include "tracecodes/errors.hpp"
#include "tracecodes/ring.hpp"

namespace tc = tracecodes;
using tc::gf::Index;

namespace {

TEST(Ring, USquaresToZero) {
    tc::ring::Extension ext(tc::gf::build_field(3, 4), 2);
    EXPECT_EQ(ext.u() * ext.u(), ext.zero());
    EXPECT_EQ(ext.q(), 9u);
    EXPECT_EQ(ext.m(), 2u);
}

TEST(Ring, UnitsAreExactlyNonzeroFirstComponent) {
    tc::ring::Extension ext(tc::gf::build_field(2, 3), 1);
    for (Index a = 0; a < 8; ++a)
        for (Index b = 0; b < 8; ++b) {
            const auto x = ext.make(a, b);
            ASSERT_EQ(tc::ring::is_unit(x), a != 0);
            if (a != 0) ASSERT_EQ(x * tc::ring::inverse(x), ext.one());
            else ASSERT_THROW((void)tc::ring::inverse(x), tc::ArithmeticError);
        }
}

TEST(Ring, MultiplicationIsCommutativeAndDistributive) {
    tc::ring::Extension ext(tc::gf::build_field(3, 2), 1);
    for (Index a = 0; a < 9; ++a)
        for (Index b = 0; b < 9; b += 2)
            for (Index c = 0; c < 9; c += 3) {
                const auto x = ext.make(a, b), y = ext.make(c, a), z = ext.make(b, c);
                ASSERT_EQ(x * y, y * x);
                ASSERT_EQ(x * (y + z), x * y + x * z);
                ASSERT_EQ(x - x, ext.zero());
            }
}

TEST(Ring, TraceIsFrobeniusOrbitSumAndLandsInBaseRing) {
    tc::ring::Extension ext(tc::gf::build_field(2, 6), 2);
    for (Index a = 0; a < 64; a += 3)
        for (Index b = 0; b < 64; b += 5) {
            const auto x = ext.make(a, b);
            auto acc = ext.zero();
            auto y = x;
            for (unsigned j = 0; j < 3; ++j) {
                acc = acc + y;
                y = ext.frobenius(y);
            }
            ASSERT_EQ(ext.trace(x), acc);
            ASSERT_TRUE(ext.in_base_ring(acc));
        }
}

TEST(Ring, FrobeniusHasOrderM) {
    tc::ring::Extension ext(tc::gf::build_field(5, 2), 1);
    const auto x = ext.make(7, 11);
    EXPECT_NE(ext.frobenius(x), x);
    EXPECT_EQ(ext.frobenius(ext.frobenius(x)), x);
}

TEST(Ring, RejectsNonDividingBaseDegree) {
    EXPECT_THROW(tc::ring::Extension(tc::gf::build_field(2, 6), 4), tc::InvalidArgument);
}

}  // namespace
