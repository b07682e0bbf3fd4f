#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/serialize.hpp"
#include "tracecodes/theory.hpp"

namespace tracecodes::cli {

namespace {

using io::Json;

code::CodeSpec spec_of(const RunConfig& cfg) { return code::CodeSpec::make(cfg.p, cfg.s, cfg.m, cfg.e); }

std::string theorem_name(const code::CodeSpec& spec) {
    return spec.N <= 4 ? "gcd=" + std::to_string(spec.N) : "general (exact periods)";
}

Json big_json(const cyclo::BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(16) << key << value << "\n";
}

std::string diff_string(const std::vector<theory::WeightDifference>& diffs) {
    std::ostringstream os;
    for (const auto& d : diffs)
        os << " w=" << d.weight << " predicted " << d.predicted << " observed " << d.observed << ";";
    return os.str();
}

struct Observation {
    bool brute_force = false;
    code::SpectrumResult spectrum;
    std::vector<code::StratumWeight> strata;
    std::string notice;
};

// Brute force within budget, otherwise representatives. Returns false on refusal in strict mode.
bool observe(const RunConfig& cfg, const code::TraceCode& tc, Observation& obs) {
    try {
        obs.spectrum = tc.brute_force_spectrum(cfg.budget, cfg.workers);
        obs.brute_force = true;
    } catch (const BudgetExceeded& ex) {
        if (cfg.strict) {
            obs.notice = ex.what();
            return false;
        }
        obs.notice = std::string("budget exceeded, using one representative per stratum: ") + ex.what();
        obs.strata = tc.representative_spectrum_check();
        obs.spectrum.distribution = code::distribution_from_strata(tc.spec(), obs.strata);
    }
    return true;
}

Json strata_json(const std::vector<code::StratumWeight>& strata) {
    Json arr = Json::array();
    for (const auto& st : strata) {
        Json j;
        j["stratum"] = st.class_index < 0 ? std::string("unit") : "class " + std::to_string(st.class_index);
        j["weight"] = st.weight;
        j["frequency"] = st.frequency;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json solution_json(const cyclo::DiophantineSolution& s) {
    Json j;
    j["equation"] = cyclo::to_string(s.kind);
    j["target"] = s.target;
    j["first"] = s.first;
    j["second"] = s.second;
    j["second_sign_free"] = s.second_sign_free;
    return j;
}

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

}  // namespace

std::vector<std::uint64_t> parse_range(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoull(part));
            } else {
                const std::uint64_t lo = std::stoull(part.substr(0, dash));
                const std::uint64_t hi = std::stoull(part.substr(dash + 1));
                for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw InvalidArgument("cannot parse range element '" + part + "'");
        }
    }
    return out;
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = spec_of(cfg);
    if (cfg.format == Format::Json) {
        Json j;
        j["params"] = io::params_json(spec);
        j["gray_length"] = spec.gray_length;
        j["dimension"] = spec.dimension;
        j["theorem"] = theorem_name(spec);
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "p,s,m,e,q,r,N,n,gray_length,dimension,theorem\n";
        out << spec.p << "," << spec.s << "," << spec.m << "," << spec.e << "," << spec.q << "," << spec.r << ","
            << spec.N << "," << spec.n << "," << spec.gray_length << "," << spec.dimension << ","
            << theorem_name(spec) << "\n";
    } else {
        print_row(out, "spec", spec.label());
        print_row(out, "q", std::to_string(spec.q));
        print_row(out, "r", std::to_string(spec.r));
        print_row(out, "N = gcd(e,m)", std::to_string(spec.N));
        print_row(out, "n", std::to_string(spec.n));
        print_row(out, "gray length", std::to_string(spec.gray_length));
        print_row(out, "dimension", std::to_string(spec.dimension));
        print_row(out, "theorem", theorem_name(spec));
    }
    return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto spec = spec_of(cfg);
    const code::TraceCode tc(spec);
    Observation obs;
    if (!observe(cfg, tc, obs)) {
        err << "error: " << obs.notice << "\n";
        return kBudget;
    }
    if (!obs.notice.empty()) err << "notice: " << obs.notice << "\n";
    const auto& d = obs.spectrum.distribution;
    const std::uint64_t count = obs.brute_force ? obs.spectrum.codeword_count : spec.r * spec.r;
    if (cfg.format == Format::Json) {
        Json j = io::spectrum_json(spec, d, count);
        j["mode"] = obs.brute_force ? "brute_force" : "representative";
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "weight,frequency\n";
        for (const auto& [w, f] : d.frequencies()) out << w << "," << f << "\n";
    } else {
        print_row(out, "spec", spec.label());
        print_row(out, "mode", obs.brute_force ? "brute force" : "representative");
        print_row(out, "parameters", "[" + std::to_string(spec.gray_length) + ", " + std::to_string(spec.dimension) +
                                         ", " + std::to_string(d.min_distance()) + "]");
        print_row(out, "enumerator", d.enumerator());
        print_row(out, "codewords", std::to_string(count));
        out << std::right;
        for (const auto& [w, f] : d.frequencies()) out << std::setw(12) << w << std::setw(12) << f << "\n";
    }
    return kOk;
}

int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = spec_of(cfg);
    const auto pred = theory::predict(spec);
    if (cfg.format == Format::Json) {
        out << io::prediction_json(spec, pred).dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "weight,frequency\n";
        for (const auto& [w, f] : pred.distribution.frequencies()) out << w << "," << f << "\n";
    } else {
        print_row(out, "spec", spec.label());
        print_row(out, "theorem", pred.theorem + (pred.case_label.empty() ? "" : ", " + pred.case_label));
        if (!pred.sign_choice.empty()) print_row(out, "sign", pred.sign_choice);
        print_row(out, "enumerator", pred.distribution.enumerator());
        print_row(out, "min distance", std::to_string(pred.distribution.min_distance()));
        print_row(out, "periods agree", pred.matches_exact_periods ? "yes" : "no");
        for (const auto& note : pred.notes) print_row(out, "note", note);
        if (auto e = theory::erratum_for(spec)) {
            print_row(out, "printed", e->printed_enumerator);
            print_row(out, "erratum", e->note);
        }
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto spec = spec_of(cfg);
    const auto general = theory::predict_general(spec);
    const auto specific = theory::predict(spec);
    const bool predictors_agree = general.distribution == specific.distribution;

    const code::TraceCode tc(spec);
    Observation obs;
    if (!observe(cfg, tc, obs)) {
        err << "error: " << obs.notice << "\n";
        return kBudget;
    }
    if (!obs.notice.empty()) err << "notice: " << obs.notice << "\n";

    bool match = predictors_agree;
    std::vector<theory::WeightDifference> diffs;
    std::vector<theory::StratumDifference> stratum_diffs;
    if (obs.brute_force) {
        const auto rep = theory::compare(specific, obs.spectrum.distribution);
        const auto rep_general = theory::compare(general, obs.spectrum.distribution);
        diffs = rep.differences;
        match = match && rep.match && rep_general.match && obs.spectrum.codeword_count == spec.r * spec.r;
    } else {
        const auto rep = theory::compare_strata(specific, obs.strata);
        const auto rep_general = theory::compare_strata(general, obs.strata);
        stratum_diffs = rep.differences;
        match = match && rep.match && rep_general.match;
    }

    std::optional<theory::GriesmerReport> gri;
    if (spec.N == 1) gri = theory::griesmer_check(spec, obs.spectrum.distribution.min_distance());

    if (cfg.format == Format::Json) {
        Json j;
        j["params"] = io::params_json(spec);
        j["gray_length"] = spec.gray_length;
        j["dimension"] = spec.dimension;
        j["mode"] = obs.brute_force ? "brute_force" : "representative";
        Json pj;
        pj["theorem"] = specific.theorem;
        pj["case"] = specific.case_label;
        if (!specific.sign_choice.empty()) pj["sign"] = specific.sign_choice;
        pj["distribution"] = io::distribution_json(specific.distribution);
        pj["agrees_with_general"] = predictors_agree;
        j["predicted"] = std::move(pj);
        Json oj;
        oj["distribution"] = io::distribution_json(obs.spectrum.distribution);
        oj["min_distance"] = obs.spectrum.distribution.min_distance();
        if (obs.brute_force) {
            oj["codeword_count"] = obs.spectrum.codeword_count;
        } else {
            oj["strata"] = strata_json(obs.strata);
        }
        j["observed"] = std::move(oj);
        j["match"] = match;
        Json dj = Json::array();
        for (const auto& d : diffs) dj.push_back(Json{{"weight", d.weight}, {"predicted", d.predicted}, {"observed", d.observed}});
        for (const auto& d : stratum_diffs)
            dj.push_back(Json{{"stratum", d.class_index < 0 ? std::string("unit") : "class " + std::to_string(d.class_index)},
                              {"predicted", d.predicted},
                              {"observed", d.observed}});
        j["differences"] = std::move(dj);
        if (gri) j["griesmer"] = io::griesmer_json(*gri);
        if (auto e = theory::erratum_for(spec))
            j["erratum"] = Json{{"printed_parameters", e->printed_parameters},
                                {"printed_enumerator", e->printed_enumerator},
                                {"note", e->note}};
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "p,s,m,e,mode,predicted,observed,match\n";
        out << spec.p << "," << spec.s << "," << spec.m << "," << spec.e << ","
            << (obs.brute_force ? "brute_force" : "representative") << "," << specific.distribution.enumerator() << ","
            << obs.spectrum.distribution.enumerator() << "," << (match ? "yes" : "no") << "\n";
    } else {
        print_row(out, "spec", spec.label());
        print_row(out, "mode", obs.brute_force ? "brute force" : "representative");
        print_row(out, "predicted", specific.distribution.enumerator() + "  (" + specific.theorem + ")");
        print_row(out, "observed", obs.spectrum.distribution.enumerator());
        if (obs.brute_force) print_row(out, "codewords", std::to_string(obs.spectrum.codeword_count));
        print_row(out, "general agrees", predictors_agree ? "yes" : "no");
        if (gri) print_row(out, "griesmer", gri->verdict_string() + " (sum " + std::to_string(gri->sum) + ")");
        if (!diffs.empty()) print_row(out, "differences", diff_string(diffs));
        for (const auto& d : stratum_diffs)
            print_row(out, "stratum diff", (d.class_index < 0 ? std::string("unit") : "class " + std::to_string(d.class_index)) +
                                               ": predicted " + std::to_string(d.predicted) + " observed " +
                                               std::to_string(d.observed));
        print_row(out, "match", match ? "yes" : "no");
    }
    return match ? kOk : kMismatch;
}

int cmd_periods(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!gf::is_prime(cfg.p)) throw InvalidArgument("p = " + std::to_string(cfg.p) + " is not prime");
    if (cfg.s == 0 || cfg.m == 0) throw InvalidArgument("s and m must be at least 1");
    const auto F = gf::build_field(cfg.p, cfg.s * cfg.m);
    const std::uint64_t r = F->order();
    const std::uint64_t N = cfg.N;
    if (N == 0 || (r - 1) % N != 0) throw InvalidArgument("N must divide r-1");

    const auto periods = cyclo::gaussian_periods(*F, N);
    cyclo::CyclotomicInteger sum(cfg.p);
    for (const auto& eta : periods) sum += eta;
    const auto poly = cyclo::expand_period_polynomial(periods, r);
    const auto roots = poly.integer_roots();

    Json j;
    j["p"] = cfg.p;
    j["s"] = cfg.s;
    j["m"] = cfg.m;
    j["r"] = r;
    j["N"] = N;
    Json pj = Json::array();
    for (const auto& eta : periods) {
        if (eta.is_rational()) {
            pj.push_back(big_json(eta.rational_value()));
        } else {
            pj.push_back(eta.to_string());
        }
    }
    j["periods"] = std::move(pj);
    j["sum"] = sum.is_rational() ? big_json(sum.rational_value()) : Json(sum.to_string());
    Json cj = Json::array();
    for (const auto& c : poly.coeffs) cj.push_back(big_json(c));
    j["polynomial"] = Json{{"coefficients", std::move(cj)}, {"text", poly.to_string()}};
    Json rj = Json::array();
    for (const auto& x : roots) rj.push_back(big_json(x));
    j["integer_roots"] = std::move(rj);

    if (N >= 2 && N <= 4) {
        try {
            const auto cf = cyclo::closed_form_periods(*F, cfg.s, N);
            Json c;
            c["case"] = cf.case_label;
            c["factorization"] = cf.factorization;
            c["rational"] = cf.rational;
            Json roots_json = Json::array();
            for (const auto& root : cf.roots)
                roots_json.push_back(Json{{"value", big_json(root.value)}, {"multiplicity", root.multiplicity}});
            c["roots"] = std::move(roots_json);
            if (!cf.surd_roots.empty()) {
                Json sj = Json::array();
                for (const auto& sr : cf.surd_roots) sj.push_back(sr.to_string());
                c["surd_roots"] = std::move(sj);
            }
            if (!cf.rational) {
                Json nj = Json::array();
                for (const auto& z : cf.numeric_roots) nj.push_back(Json::array({z.real(), z.imag()}));
                c["numeric_roots"] = std::move(nj);
            }
            if (!cf.reading.empty()) c["reading"] = cf.reading;
            if (!cf.alternate_reading.empty()) {
                Json aj = Json::array();
                for (const auto& root : cf.alternate_roots)
                    aj.push_back(Json{{"value", big_json(root.value)}, {"multiplicity", root.multiplicity}});
                c["alternate_reading"] = cf.alternate_reading;
                c["alternate_roots"] = std::move(aj);
                c["readings_diverge"] = cf.readings_diverge;
            }
            c["matches_exact"] = cf.matches_exact;
            j["closed_form"] = std::move(c);
            Json dj;
            if (cf.norm_solution) dj["norm"] = solution_json(*cf.norm_solution);
            if (cf.root_solution) dj["root"] = solution_json(*cf.root_solution);
            if (N == 3 && cf.norm_solution)
                dj["formula_agrees"] = cyclo::cubic_period_polynomial_formula(r, cf.norm_solution->first) == poly;
            if (N == 4 && cf.norm_solution)
                dj["formula_agrees"] = cyclo::quartic_period_polynomial_formula(r, cf.norm_solution->first) == poly;
            if (!dj.empty()) j["diophantine"] = std::move(dj);
        } catch (const CaseMismatch& ex) {
            j["closed_form"] = Json{{"case", "irreducible"}, {"detail", ex.what()}};
        }
    }

    if (cfg.format == Format::Json) {
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "i,period\n";
        for (std::size_t i = 0; i < periods.size(); ++i) out << i << "," << csv_safe(periods[i].to_string()) << "\n";
    } else {
        print_row(out, "field", F->describe());
        for (std::size_t i = 0; i < periods.size(); ++i) print_row(out, "eta_" + std::to_string(i), periods[i].to_string());
        print_row(out, "sum", sum.to_string());
        print_row(out, "polynomial", poly.to_string());
        if (j.contains("closed_form")) {
            print_row(out, "case", j["closed_form"]["case"].get<std::string>());
            if (j["closed_form"].contains("factorization"))
                print_row(out, "factorization", j["closed_form"]["factorization"].get<std::string>());
        }
    }
    return kOk;
}

int cmd_griesmer(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = spec_of(cfg);
    const std::uint64_t d = cfg.d != 0 ? cfg.d : theory::predict(spec).distribution.min_distance();
    const auto rep = theory::griesmer_check(spec, d);
    if (cfg.format == Format::Json) {
        Json j;
        j["params"] = io::params_json(spec);
        j["griesmer"] = io::griesmer_json(rep);
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "n_gray,k,d,sum,verdict\n" << rep.n_gray << "," << rep.k << "," << rep.d << "," << rep.sum << ","
            << rep.verdict_string() << "\n";
    } else {
        print_row(out, "spec", spec.label());
        print_row(out, "[n, k, d]", "[" + std::to_string(rep.n_gray) + ", " + std::to_string(rep.k) + ", " +
                                        std::to_string(rep.d) + "]");
        print_row(out, "sum", std::to_string(rep.sum));
        print_row(out, "verdict", rep.verdict_string());
    }
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    struct Row {
        unsigned p, s, m;
        std::uint64_t e;
    };
    std::vector<Row> candidates;
    for (const auto& text : cfg.specs) {
        const auto v = parse_range(text);
        if (v.size() != 4) throw InvalidArgument("--spec expects p,s,m,e");
        candidates.push_back({static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2]), v[3]});
    }
    for (std::uint64_t p : parse_range(cfg.p_range))
        for (std::uint64_t s : parse_range(cfg.s_range))
            for (std::uint64_t m : parse_range(cfg.m_range)) {
                if (!gf::is_prime(p) || s == 0 || m == 0) continue;
                std::uint64_t q = 1;
                bool too_big = false;
                for (std::uint64_t i = 0; i < s && !too_big; ++i) too_big = (q *= p) > gf::kDefaultSizeBound;
                if (too_big) continue;
                std::vector<std::uint64_t> es;
                if (cfg.e_range == "all") {
                    for (std::uint64_t e = 1; e <= q - 1; ++e)
                        if ((q - 1) % e == 0) es.push_back(e);
                } else {
                    es = parse_range(cfg.e_range);
                }
                for (std::uint64_t e : es)
                    if (e != 0 && (q - 1) % e == 0)
                        candidates.push_back({static_cast<unsigned>(p), static_cast<unsigned>(s), static_cast<unsigned>(m), e});
            }

    Json rows = Json::array();
    for (const auto& c : candidates) {
        Json row;
        try {
            const auto spec = code::CodeSpec::make(c.p, c.s, c.m, c.e);
            if (cfg.gcd_filter != 0 && spec.N != cfg.gcd_filter) continue;
            if (spec.e < cfg.min_e) continue;
            code::WeightDistribution dist;
            std::string source = "predicted";
            const long double work = static_cast<long double>(spec.r) * spec.r * spec.n;
            if (work <= static_cast<long double>(cfg.budget)) {
                dist = code::TraceCode(spec).brute_force_spectrum(cfg.budget, cfg.workers).distribution;
                source = "brute_force";
            } else {
                dist = theory::predict(spec).distribution;
            }
            const auto gri = theory::griesmer_check(spec, dist.min_distance());
            row["p"] = spec.p;
            row["s"] = spec.s;
            row["m"] = spec.m;
            row["e"] = spec.e;
            row["q"] = spec.q;
            row["r"] = spec.r;
            row["N"] = spec.N;
            row["n"] = spec.n;
            row["gray_length"] = spec.gray_length;
            row["dimension"] = spec.dimension;
            row["min_distance"] = dist.min_distance();
            row["num_weights"] = dist.num_nonzero_weights();
            row["griesmer_verdict"] = gri.verdict_string();
            row["enumerator"] = dist.enumerator();
            row["source"] = source;
        } catch (const std::exception& ex) {
            row = Json{{"p", c.p}, {"s", c.s}, {"m", c.m}, {"e", c.e}, {"error", ex.what()}};
        }
        rows.push_back(std::move(row));
    }

    static const std::vector<std::string> kColumns{"p", "s", "m", "e", "q", "r", "N", "n", "gray_length", "dimension",
                                                   "min_distance", "num_weights", "griesmer_verdict", "enumerator"};
    auto cell = [](const Json& row, const std::string& key) -> std::string {
        if (row.contains("error")) {
            if (key == "griesmer_verdict") return "error";
            if (key == "enumerator") return row["error"].get<std::string>();
        }
        if (!row.contains(key)) return "";
        const Json& v = row[key];
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (cfg.format == Format::Json) {
        out << rows.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << csv_safe(cell(row, kColumns[i]));
            out << "\n";
        }
    } else {
        std::vector<std::size_t> width(kColumns.size() - 1);
        for (std::size_t i = 0; i < width.size(); ++i) {
            width[i] = std::string(kColumns[i]).size();
            for (const auto& row : rows) width[i] = std::max(width[i], cell(row, kColumns[i]).size());
        }
        for (std::size_t i = 0; i < width.size(); ++i) out << std::left << std::setw(width[i] + 2) << kColumns[i];
        out << "enumerator\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < width.size(); ++i)
                out << std::left << std::setw(width[i] + 2) << cell(row, kColumns[i]);
            out << cell(row, "enumerator") << "\n";
        }
    }
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Trace codes over F_q + uF_q: spectra, predictions and checks", "tracecode"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto common = [&](CLI::App* sub, bool with_spec) {
        if (with_spec) {
            sub->add_option("--p", cfg.p, "characteristic")->required();
            sub->add_option("--s", cfg.s, "q = p^s")->capture_default_str();
            sub->add_option("--m", cfg.m, "r = q^m")->capture_default_str();
        }
        sub->add_option("--format", cfg.format, "table, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--budget", cfg.budget, "brute-force budget in coordinate evaluations")->capture_default_str();
        sub->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
        sub->add_flag("--strict", cfg.strict, "exit 3 instead of falling back when over budget");
    };

    auto* info = app.add_subcommand("info", "derived parameters");
    auto* spectrum = app.add_subcommand("spectrum", "exact Lee weight distribution by enumeration");
    auto* predict = app.add_subcommand("predict", "closed-form Lee weight distribution");
    auto* verify = app.add_subcommand("verify", "compare predictions with enumeration");
    auto* griesmer = app.add_subcommand("griesmer", "Griesmer bound of the Gray image");
    for (auto* sub : {info, spectrum, predict, verify, griesmer}) {
        common(sub, true);
        sub->add_option("--e", cfg.e, "divisor of q-1")->required();
    }
    griesmer->add_option("--d", cfg.d, "minimum distance (default: predicted)");

    auto* periods = app.add_subcommand("periods", "Gaussian periods and period polynomial");
    common(periods, true);
    periods->add_option("--N", cfg.N, "order of the cyclotomic classes")->required();

    auto* scan = app.add_subcommand("scan", "sweep over parameter ranges");
    common(scan, false);
    scan->add_option("--p", cfg.p_range, "primes, e.g. 2,3,5-7");
    scan->add_option("--s", cfg.s_range, "values of s")->capture_default_str();
    scan->add_option("--m", cfg.m_range, "values of m");
    scan->add_option("--e", cfg.e_range, "values of e, or 'all' divisors of q-1")->capture_default_str();
    scan->add_option("--spec", cfg.specs, "explicit p,s,m,e (repeatable)");
    scan->add_option("--gcd", cfg.gcd_filter, "keep only gcd(e,m) = N");
    scan->add_option("--min-e", cfg.min_e, "keep only e >= value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kInvalid;
    }
    if (cfg.workers == 0) cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    try {
        if (*info) return cmd_info(cfg, out, err);
        if (*spectrum) return cmd_spectrum(cfg, out, err);
        if (*predict) return cmd_predict(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*periods) return cmd_periods(cfg, out, err);
        if (*griesmer) return cmd_griesmer(cfg, out, err);
        if (*scan) return cmd_scan(cfg, out, err);
    } catch (const InvalidArgument& ex) {
        err << "error: " << ex.what() << "\n";
        return kInvalid;
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return kBudget;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kMismatch;
    }
    return kInvalid;
}

}  // namespace tracecodes::cli
