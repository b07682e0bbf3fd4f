#pragma once

// Test-side reference computations. Nothing here uses the log/Zech tables or the trace
// tables of the library; polynomial arithmetic over F_p is redone from scratch.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tracecodes/gf.hpp"
#include "tracecodes/tracecode.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over F_p

Poly poly_from_index(std::uint64_t index, unsigned p, unsigned len);
std::uint64_t poly_to_index(const Poly& a, unsigned p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p);
/// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const Poly& monic, unsigned p);
/// Lexicographically smallest monic irreducible of degree k, searched exhaustively.
Poly smallest_irreducible(unsigned p, unsigned k);
/// Smallest index whose multiplicative order is p^k - 1, using poly_mulmod only.
std::uint64_t smallest_primitive(const Poly& modulus, unsigned p);

/// Tr_{p^k/p}(x) by repeated p-th powers through poly_mulmod.
std::uint32_t absolute_trace(const tracecodes::gf::Field& F, tracecodes::gf::Index x);
/// Sum over C_i^{(N,r)} of exp(2 pi i Tr(x)/p), in floating point.
std::vector<std::complex<double>> numeric_periods(const tracecodes::gf::Field& F, std::uint64_t N);

/// Lee weight distribution from ring arithmetic and the Frobenius-sum trace, digitwise additions.
tracecodes::code::WeightDistribution naive_spectrum(const tracecodes::code::CodeSpec& spec);

/// "1+56z^56+7z^64" -> {0:1, 56:56, 64:7}
std::map<std::uint64_t, std::uint64_t> parse_enumerator(const std::string& text);

/// All valid (p, s, m, e) with r = p^{sm} <= r_max.
std::vector<tracecodes::code::CodeSpec> specs_up_to(std::uint64_t r_max);

}  // namespace oracle
