#include "tracecodes/serialize.hpp"

namespace tracecodes::io {

Json params_json(const code::CodeSpec& spec) {
    Json j;
    j["p"] = spec.p;
    j["s"] = spec.s;
    j["m"] = spec.m;
    j["e"] = spec.e;
    j["q"] = spec.q;
    j["r"] = spec.r;
    j["n"] = spec.n;
    j["N"] = spec.N;
    return j;
}

Json distribution_json(const code::WeightDistribution& d) {
    Json arr = Json::array();
    for (const auto& [w, f] : d.frequencies()) arr.push_back(Json{{"weight", w}, {"frequency", f}});
    return arr;
}

code::WeightDistribution distribution_from_json(const Json& j) {
    code::WeightDistribution d;
    for (const auto& entry : j) d.add(entry.at("weight").get<std::uint64_t>(), entry.at("frequency").get<std::uint64_t>());
    return d;
}

Json spectrum_json(const code::CodeSpec& spec, const code::WeightDistribution& d, std::uint64_t codeword_count) {
    Json j;
    j["params"] = params_json(spec);
    j["gray_length"] = spec.gray_length;
    j["dimension"] = spec.dimension;
    j["distribution"] = distribution_json(d);
    j["min_distance"] = d.min_distance();
    j["codeword_count"] = codeword_count;
    return j;
}

Json prediction_json(const code::CodeSpec& spec, const theory::PredictedDistribution& pred) {
    Json j = spectrum_json(spec, pred.distribution, spec.r * spec.r);
    Json prov;
    prov["theorem"] = pred.theorem;
    prov["case"] = pred.case_label;
    if (!pred.reading.empty()) prov["reading"] = pred.reading;
    if (!pred.sign_choice.empty()) prov["sign"] = pred.sign_choice;
    prov["matches_exact_periods"] = pred.matches_exact_periods;
    prov["exact_integers"] = pred.exact_integers;
    Json strata = Json::array();
    for (const auto& st : pred.strata) {
        Json s;
        s["stratum"] = st.class_index < 0 ? std::string("unit") : "class " + std::to_string(st.class_index);
        s["weight"] = st.weight;
        s["frequency"] = st.frequency;
        strata.push_back(std::move(s));
    }
    prov["strata"] = std::move(strata);
    prov["notes"] = pred.notes;
    j["provenance"] = std::move(prov);
    if (auto err = theory::erratum_for(spec)) {
        j["erratum"] = Json{{"printed_parameters", err->printed_parameters},
                            {"printed_enumerator", err->printed_enumerator},
                            {"note", err->note}};
    }
    return j;
}

SpectrumRecord parse_spectrum(const Json& j) {
    const Json& p = j.at("params");
    SpectrumRecord rec;
    rec.spec = code::CodeSpec::make(p.at("p").get<unsigned>(), p.at("s").get<unsigned>(), p.at("m").get<unsigned>(),
                                    p.at("e").get<std::uint64_t>());
    if (p.at("q").get<std::uint64_t>() != rec.spec.q || p.at("r").get<std::uint64_t>() != rec.spec.r ||
        p.at("n").get<std::uint64_t>() != rec.spec.n || p.at("N").get<std::uint64_t>() != rec.spec.N ||
        j.at("gray_length").get<std::uint64_t>() != rec.spec.gray_length ||
        j.at("dimension").get<unsigned>() != rec.spec.dimension)
        throw InvalidArgument("derived parameters in the document do not match (p, s, m, e)");
    rec.distribution = distribution_from_json(j.at("distribution"));
    rec.min_distance = j.at("min_distance").get<std::uint64_t>();
    rec.codeword_count = j.at("codeword_count").get<std::uint64_t>();
    return rec;
}

Json griesmer_json(const theory::GriesmerReport& rep) {
    Json j;
    j["n_gray"] = rep.n_gray;
    j["k"] = rep.k;
    j["d"] = rep.d;
    j["q"] = rep.q;
    j["sum"] = rep.sum;
    j["verdict"] = rep.verdict_string();
    return j;
}

}  // namespace tracecodes::io
