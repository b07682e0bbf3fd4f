#include <gtest/gtest.h>

#include "tracecodes/diophantine.hpp"
#include "tracecodes/errors.hpp"

namespace tc = tracecodes;
using tc::cyclo::DiophantineKind;

namespace {

TEST(Diophantine, CubicNormForms) {
    // 4 * 7 = 1 + 27; 4 * 13 = 25 + 27
    auto s7 = tc::cyclo::solve_diophantine(DiophantineKind::CubicFourR, 7, 7);
    EXPECT_EQ(s7.first, 1);
    EXPECT_EQ(s7.second, 1);
    auto s13 = tc::cyclo::solve_diophantine(DiophantineKind::CubicFourR, 13, 13);
    EXPECT_EQ(s13.first, -5);
    EXPECT_EQ(s13.second, 1);
    EXPECT_TRUE(s13.satisfies_equation());
}

TEST(Diophantine, QuarticNormForms) {
    auto s5 = tc::cyclo::solve_diophantine(DiophantineKind::QuarticR, 5, 5);
    EXPECT_EQ(s5.first, 1);
    EXPECT_EQ(s5.second, 1);
    auto s13 = tc::cyclo::solve_diophantine(DiophantineKind::QuarticR, 13, 13);
    EXPECT_EQ(s13.first, -3);
    EXPECT_EQ(s13.second, 1);
}

TEST(Diophantine, RootFormsForTwoWeightExamples) {
    auto c = tc::cyclo::solve_diophantine(DiophantineKind::CubicFourRoot, 7, 49);
    EXPECT_EQ(c.first, 13);
    EXPECT_EQ(c.second, 1);
    auto u = tc::cyclo::solve_diophantine(DiophantineKind::QuarticRoot, 5, 25);
    EXPECT_EQ(u.first, -3);
    EXPECT_EQ(u.second, 2);
    EXPECT_TRUE(u.second_sign_free);
}

TEST(Diophantine, EverySolutionSatisfiesItsEquation) {
    for (std::uint64_t p : {7u, 13u, 19u, 31u, 37u})
        for (std::uint64_t t = p; t < 200000; t *= p)
            EXPECT_TRUE(tc::cyclo::solve_diophantine(DiophantineKind::CubicFourR, p, t).satisfies_equation());
    for (std::uint64_t p : {5u, 13u, 17u, 29u})
        for (std::uint64_t t = p; t < 200000; t *= p)
            EXPECT_TRUE(tc::cyclo::solve_diophantine(DiophantineKind::QuarticR, p, t).satisfies_equation());
}

}  // namespace
