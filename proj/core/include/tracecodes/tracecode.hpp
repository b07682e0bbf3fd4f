#pragma once

// The trace code C_q(m,e) = { (Tr(a x))_{x in L} : a in F_r + uF_r } with defining set
// L = C_0^{(e,r)} + uF_r, its Gray image, and exact Lee weight distributions.

#include <cstdint>
#include <map>
#include <span>
#include <memory>
#include <string>
#include <vector>

#include "tracecodes/gf.hpp"
#include "tracecodes/ring.hpp"

namespace tracecodes::code {

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;

struct CodeSpec {
    unsigned p = 0;
    unsigned s = 0;
    unsigned m = 0;
    std::uint64_t e = 0;
    // derived
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t N = 0;  // gcd(e, m)
    std::uint64_t n = 0;  // (r^2 - r) / e
    std::uint64_t gray_length = 0;
    unsigned dimension = 0;  // 2m

    /// Validates and derives; throws InvalidArgument naming the violated constraint.
    static CodeSpec make(unsigned p, unsigned s, unsigned m, std::uint64_t e,
                         std::uint64_t size_bound = gf::kDefaultSizeBound);

    /// "p=3 s=1 m=2 e=2"
    std::string label() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::map<std::uint64_t, std::uint64_t> freq) : freq_(std::move(freq)) {}

    void add(std::uint64_t weight, std::uint64_t count = 1);
    void merge(const WeightDistribution& other);

    const std::map<std::uint64_t, std::uint64_t>& frequencies() const { return freq_; }
    std::uint64_t frequency(std::uint64_t weight) const;
    std::uint64_t total() const;
    /// Smallest nonzero weight, 0 if the code is trivial.
    std::uint64_t min_distance() const;
    std::size_t num_nonzero_weights() const;
    /// A_0, A_1, ..., A_{max weight}.
    std::vector<std::uint64_t> coefficients() const;
    /// "1+56z^56+7z^64"
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> freq_;
};

/// A word over R = F_q + uF_q stored componentwise as field indices.
struct Codeword {
    std::vector<gf::Index> a;
    std::vector<gf::Index> b;

    std::size_t size() const { return a.size(); }
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Coordinatewise sum in R.
Codeword add(const gf::Field& F, const Codeword& x, const Codeword& y);

/// (b, a + b), b-block first.
std::vector<gf::Index> gray_map(const gf::Field& F, const Codeword& w);
std::uint64_t lee_weight(const gf::Field& F, const Codeword& w);
std::uint64_t hamming_weight(std::span<const gf::Index> v);

struct SpectrumResult {
    WeightDistribution distribution;
    std::uint64_t kernel_size = 0;     // number of a with ev(a) = 0
    std::uint64_t codeword_count = 0;  // r^2 / kernel_size, ev being additive
};

struct StratumWeight {
    int class_index = -1;  // -1 for the unit stratum, i for a = u alpha^i
    ring::RingElement representative;
    std::uint64_t weight = 0;
    std::uint64_t frequency = 0;  // stratum size
};

class TraceCode {
public:
    explicit TraceCode(const CodeSpec& spec);

    const CodeSpec& spec() const { return spec_; }
    const ring::Extension& extension() const { return ext_; }
    const gf::Field& field() const { return ext_.field(); }
    std::uint64_t length() const { return spec_.n; }

    /// Coordinate (i, j) -> alpha^{e i} + u elem(j), elem(0) = 0, elem(j) = alpha^{j-1}.
    ring::RingElement coordinate(std::uint64_t index) const;
    std::vector<ring::RingElement> defining_set() const;

    Codeword evaluate(const ring::RingElement& a) const;
    /// Lee weight of ev(alpha + u beta) without materializing the codeword.
    std::uint64_t weight_of(gf::Index alpha, gf::Index beta) const;

    /// Exhaustive over all r^2 elements a. Refuses (BudgetExceeded) when r^2 n > budget.
    /// workers = 0 uses the available hardware parallelism; the result is independent of it.
    SpectrumResult brute_force_spectrum(std::uint64_t budget = kDefaultWorkBudget, unsigned workers = 0) const;

    /// One codeword per stratum: a = 1, then a = u alpha^i for i < N.
    std::vector<StratumWeight> representative_spectrum_check() const;

private:
    CodeSpec spec_;
    ring::Extension ext_;
    std::vector<gf::Index> t_;      // C_0^{(e,r)} in order alpha^{e i}
    std::vector<gf::Index> elem_;   // elem(j)
    std::vector<gf::Index> trace_;  // Tr_{r/q} by index
};

/// Distribution implied by per-stratum weights: zero word, units, classes.
WeightDistribution distribution_from_strata(const CodeSpec& spec, const std::vector<StratumWeight>& strata);

}  // namespace tracecodes::code
