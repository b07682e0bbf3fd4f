#pragma once

// Closed-form Lee weight distributions of C_q(m,e) and the Griesmer bound.
//
// Every weight is 2(q-1)/(eq) * X for an integer X; the prefactor is applied by
// multiplying first and dividing exactly, and a non-zero remainder is an error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/cyclotomic_integer.hpp"
#include "tracecodes/tracecode.hpp"

namespace tracecodes::theory {

using cyclo::BigInt;

struct StratumPrediction {
    int class_index = -1;  // -1 for units
    std::uint64_t weight = 0;
    std::uint64_t frequency = 0;
};

struct PredictedDistribution {
    code::WeightDistribution distribution;
    std::vector<StratumPrediction> strata;  // units first, then classes 0..N-1
    std::string theorem;     // "general", "gcd=1", ...
    std::string case_label;  // e.g. "p = 1 (mod 3)"
    std::string reading;     // which scale was used for c1/d1 or u1/v1, when two exist
    std::string sign_choice; // resolved sign of d, d1 or v1
    bool matches_exact_periods = true;
    bool exact_integers = true;
    std::vector<std::string> notes;
};

/// Weight for stratum argument X: 2(q-1) X / (eq), exact.
std::uint64_t scaled_weight(const code::CodeSpec& spec, const BigInt& X);

/// Unit weight 2(q-1)/(eq) (r^2 - r); class i weight 2(q-1)/(eq) (r^2 - r(1 + N eta_i)) from exact periods.
PredictedDistribution predict_general(const code::CodeSpec& spec);

PredictedDistribution predict_gcd1(const code::CodeSpec& spec);
PredictedDistribution predict_gcd2(const code::CodeSpec& spec);
PredictedDistribution predict_gcd3(const code::CodeSpec& spec);
PredictedDistribution predict_gcd4(const code::CodeSpec& spec);
/// Dispatch on N = gcd(e, m); falls back to predict_general for N > 4.
PredictedDistribution predict(const code::CodeSpec& spec);

/// The gcd=4, p = 1 (mod 4) table rows evaluated as printed, with u1, v1 from p^{m/2}.
/// Kept separate from predict_gcd4 so the printed values can be compared with the oracle.
std::vector<std::uint64_t> gcd4_printed_table_weights(const code::CodeSpec& spec, int v1_sign = +1);

enum class GriesmerVerdict { Equality, NMinusOne, Slack, Violated };

struct GriesmerReport {
    std::uint64_t n_gray = 0;
    unsigned k = 0;
    std::uint64_t d = 0;
    std::uint64_t q = 0;
    std::uint64_t sum = 0;  // sum_{j<k} ceil(d / q^j)
    GriesmerVerdict verdict = GriesmerVerdict::Slack;
    std::uint64_t slack = 0;  // n_gray - sum when sum <= n_gray

    /// "equality", "n_minus_one", "slack(t)" or "violated"
    std::string verdict_string() const;
};

GriesmerReport griesmer_check(const code::CodeSpec& spec, std::uint64_t d);

struct WeightDifference {
    std::uint64_t weight = 0;
    std::uint64_t predicted = 0;
    std::uint64_t observed = 0;
};

struct ComparisonReport {
    bool match = false;
    std::vector<WeightDifference> differences;
    std::string sign_choice;
};

ComparisonReport compare(const PredictedDistribution& predicted, const code::WeightDistribution& observed);

struct StratumDifference {
    int class_index = -1;
    std::uint64_t predicted = 0;
    std::uint64_t observed = 0;
};

struct StratumComparison {
    bool match = false;
    std::vector<StratumDifference> differences;
};

/// Per-stratum comparison against representative_spectrum_check; classes matched by index.
StratumComparison compare_strata(const PredictedDistribution& predicted,
                                 const std::vector<code::StratumWeight>& observed);

/// Worked examples whose printed enumerators disagree with the exact computation.
struct KnownErratum {
    unsigned p, s, m;
    std::uint64_t e;
    std::string printed_parameters;  // as printed, e.g. "[39102, 6, 329]"
    std::string printed_enumerator;
    std::string note;
};

const std::vector<KnownErratum>& known_errata();
std::optional<KnownErratum> erratum_for(const code::CodeSpec& spec);

}  // namespace tracecodes::theory
