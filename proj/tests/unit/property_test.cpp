#include <gtest/gtest.h>

#include "oracles.hpp"
#include "properties.hpp"

namespace tc = tracecodes;
using tc::code::CodeSpec;

namespace {

std::string name_of(const ::testing::TestParamInfo<CodeSpec>& info) {
    const auto& s = info.param;
    return "p" + std::to_string(s.p) + "s" + std::to_string(s.s) + "m" + std::to_string(s.m) + "e" + std::to_string(s.e);
}

class CodeProperties : public ::testing::TestWithParam<CodeSpec> {};

TEST_P(CodeProperties, GrayMapIsAnIsometry) {
    const auto res = props::gray_isometry(GetParam());
    EXPECT_TRUE(res.ok) << res.detail;
}

TEST_P(CodeProperties, EvaluationIsLinear) {
    props::Rng rng(GetParam().r * 1000 + GetParam().e);
    const auto res = props::linearity(GetParam(), GetParam().r <= 9, rng, 200);
    EXPECT_TRUE(res.ok) << res.detail;
}

TEST_P(CodeProperties, EvaluationIsInjective) {
    const auto res = props::injectivity(GetParam());
    EXPECT_TRUE(res.ok) << res.detail;
}

TEST_P(CodeProperties, WeightIsConstantOnStrata) {
    const auto res = props::stratum_constancy(GetParam());
    EXPECT_TRUE(res.ok) << res.detail;
}

INSTANTIATE_TEST_SUITE_P(UpTo27, CodeProperties, ::testing::ValuesIn(oracle::specs_up_to(27)), name_of);

TEST(FieldProperties, ThetaIdentity) {
    props::Rng rng(2024);
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        const auto res = props::theta_identity(p, s, rng, 100);
        EXPECT_TRUE(res.ok) << res.detail;
    }
}

TEST(FieldProperties, MultisetLemma) {
    const auto res = props::multiset_lemma(32);
    EXPECT_TRUE(res.ok) << res.detail;
    EXPECT_GT(res.cases, 10u);
}

TEST(FieldProperties, TraceTransitivity) {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 4}, {5, 2}, {2, 8}}) {
        const auto res = props::trace_transitivity(p, k);
        EXPECT_TRUE(res.ok) << res.detail;
    }
}

TEST(FieldProperties, FrobeniusAdditivity) {
    props::Rng rng(7);
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {3, 3}, {7, 2}, {2, 16}}) {
        const auto res = props::frobenius_additivity(p, k, rng, 20000);
        EXPECT_TRUE(res.ok) << res.detail;
    }
}

}  // namespace
