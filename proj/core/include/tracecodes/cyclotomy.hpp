#pragma once

// Characters, Gauss sums, cyclotomic classes and Gaussian periods of F_r, with the
// closed-form period values for N = 2, 3, 4.
//
// All period and period-polynomial arithmetic is exact (cyclotomic integers with
// arbitrary-precision coordinates). Complex doubles appear only for multiplicative
// characters and for roots that have no rational closed form.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracecodes/cyclotomic_integer.hpp"
#include "tracecodes/diophantine.hpp"
#include "tracecodes/gf.hpp"

namespace tracecodes::cyclo {

/// Canonical additive character zeta_p^{Tr_{p^k/p}(x)}.
CyclotomicInteger additive_character(const gf::Element& x);

/// Theta(y) = sum_j chi(y_j) with chi the canonical additive character of F.
CyclotomicInteger theta(const gf::Field& F, std::span<const gf::Index> y);

/// psi_j(g^t) = exp(2 pi i j t / (q - 1)), g = F.generator(); requires 0 <= j <= q-2 and x != 0.
std::complex<double> multiplicative_character(const gf::Field& F, std::uint64_t j, gf::Index x);

/// G(psi_j, chi) = sum_{c != 0} psi_j(c) chi(c).
std::complex<double> gauss_sum_numeric(const gf::Field& F, std::uint64_t j);

/// Exact G(eta, chi) for the quadratic character eta (p odd).
CyclotomicInteger quadratic_gauss_sum_exact(const gf::Field& F);

/// (-1)^{s-1} q^{1/2} for p = 1 (mod 4), (-1)^{s-1} i^s q^{1/2} for p = 3 (mod 4), with q = p^s = |F|.
std::complex<double> quadratic_gauss_sum_closed_form(const gf::Field& F);

struct QuadraticSumIdentity {
    std::complex<double> direct;       // sum_c chi(a2 c^2 + a1 c + a0)
    std::complex<double> closed_form;  // chi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G(eta, chi)
    bool holds;                        // |direct - closed_form| < 1e-9
};

/// Requires p odd and a2 != 0.
QuadraticSumIdentity quadratic_sum_identity(const gf::Field& F, gf::Index a2, gf::Index a1, gf::Index a0);
bool quadratic_sum_identity_check(const gf::Field& F, gf::Index a2, gf::Index a1, gf::Index a0);

/// discrete_log(x) mod N; requires x != 0 and N | r - 1.
std::uint64_t cyclotomic_class(const gf::Element& x, std::uint64_t N);

/// {xy : y in C_0^{(e,r)}, x in F_q^*} = ((q-1)/e) gcd(m,e) * C_0^{(gcd(m,e),r)} as multisets,
/// F_q being the degree-s subfield of F (r = |F|, m = deg F / s). Enumerated, not derived.
bool multiset_product_check(const gf::Field& F, unsigned s, std::uint64_t e,
                            std::uint64_t work_budget = 1'000'000'000);

/// eta_i^{(N,r)} = sum over C_i^{(N,r)} of the canonical additive character.
std::vector<CyclotomicInteger> gaussian_periods(const gf::Field& F, std::uint64_t N);
CyclotomicInteger gaussian_period_exact(const gf::Field& F, std::uint64_t N, std::uint64_t i);

struct PeriodPolynomial {
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::vector<BigInt> coeffs;  // ascending; coeffs[N] == 1

    BigInt evaluate(const BigInt& x) const;
    CyclotomicInteger evaluate(const CyclotomicInteger& x) const;
    /// All integer roots with multiplicity, ascending (rational root test on the monic polynomial).
    std::vector<BigInt> integer_roots() const;
    std::string to_string() const;

    friend bool operator==(const PeriodPolynomial&, const PeriodPolynomial&) = default;
};

/// prod_i (X - eta_i) expanded exactly; every coefficient must be rational (ArithmeticError otherwise).
PeriodPolynomial period_polynomial(const gf::Field& F, std::uint64_t N, std::uint64_t work_budget = 10'000'000'000);
PeriodPolynomial expand_period_polynomial(std::span<const CyclotomicInteger> periods, std::uint64_t r);

/// X^3 + X^2 - (r-1)/3 X - ((c+3)r - 1)/27.
PeriodPolynomial cubic_period_polynomial_formula(std::uint64_t r, std::int64_t c);
/// The two quartic formulas, chosen by the parity of (r-1)/4.
PeriodPolynomial quartic_period_polynomial_formula(std::uint64_t r, std::int64_t u);

/// (a + b sqrt(radicand)) / denominator; radicand may be negative.
struct QuadraticSurd {
    BigInt a;
    BigInt b;
    std::int64_t radicand = 0;
    std::int64_t denominator = 1;

    std::complex<double> value() const;
    std::string to_string() const;
};

struct RationalRoot {
    BigInt value;
    unsigned multiplicity = 1;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Closed-form Gaussian periods read off the factorization of the period polynomial.
struct ClosedFormPeriods {
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    unsigned p = 0;
    unsigned sm = 0;
    std::string case_label;     // e.g. "N=3 (a), sm/2 odd"
    std::string factorization;  // the factored polynomial in words
    bool rational = false;
    std::vector<RationalRoot> roots;          // when rational, ascending
    std::vector<QuadraticSurd> surd_roots;    // N = 2 with sm odd
    std::vector<std::complex<double>> numeric_roots;
    std::optional<DiophantineSolution> norm_solution;  // c,d (N=3) or u,v (N=4)
    std::optional<DiophantineSolution> root_solution;  // c1,d1 or u1,v1 for the selected reading
    std::string reading;                               // "r-scaled" or "literal" where two readings exist
    std::vector<RationalRoot> alternate_roots;         // roots under the other reading, if it exists
    std::string alternate_reading;
    bool readings_diverge = false;
    bool matches_exact = false;  // roots (or numeric roots) agree with gaussian_periods()
};

/// N in {2, 3, 4}, N | r - 1. Throws CaseMismatch for the irreducible cases
/// (N = 3 with p = 1 mod 3 and 3 not dividing sm; N = 4 with p = 1 mod 4 and sm odd).
/// `s` is the base field degree, used only for the literal p^{m/3} / p^{m/2} reading.
ClosedFormPeriods closed_form_periods(const gf::Field& F, unsigned s, std::uint64_t N);

}  // namespace tracecodes::cyclo
