#pragma once

// JSON documents for spectra and predictions. Keys keep insertion order, weights ascend.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tracecodes/theory.hpp"
#include "tracecodes/tracecode.hpp"

namespace tracecodes::io {

using Json = nlohmann::ordered_json;

Json params_json(const code::CodeSpec& spec);
Json distribution_json(const code::WeightDistribution& d);
code::WeightDistribution distribution_from_json(const Json& j);

/// {"params", "gray_length", "dimension", "distribution", "min_distance", "codeword_count"}
Json spectrum_json(const code::CodeSpec& spec, const code::WeightDistribution& d, std::uint64_t codeword_count);

/// spectrum_json plus "provenance" and, when the example is a known erratum, "erratum".
Json prediction_json(const code::CodeSpec& spec, const theory::PredictedDistribution& pred);

struct SpectrumRecord {
    code::CodeSpec spec;
    code::WeightDistribution distribution;
    std::uint64_t min_distance = 0;
    std::uint64_t codeword_count = 0;

    friend bool operator==(const SpectrumRecord&, const SpectrumRecord&) = default;
};

/// Inverse of spectrum_json; the derived parameters are recomputed and must agree.
SpectrumRecord parse_spectrum(const Json& j);

Json griesmer_json(const theory::GriesmerReport& rep);

}  // namespace tracecodes::io
