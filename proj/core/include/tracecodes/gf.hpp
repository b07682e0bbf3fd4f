#pragma once

// Prime-power finite fields F_{p^k} with log/antilog/Zech tables.
//
// Elements are identified by an index: the coefficient vector (c_0, ..., c_{k-1}) of the
// polynomial-basis representation read as base-p digits, index = sum c_i p^i. Reading the
// tuple (c_{k-1}, ..., c_0) lexicographically is therefore the same as ordering indices
// numerically; both the modulus and the generator are chosen as the smallest admissible
// index, which makes construction deterministic.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes::gf {

using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultSizeBound = std::uint64_t{1} << 20;

class Field;

/// A field element bound to the field that owns it. The field must outlive the element.
struct Element {
    const Field* field = nullptr;
    Index value = 0;

    bool is_zero() const { return value == 0; }
    friend bool operator==(const Element& x, const Element& y) {
        return x.field == y.field && x.value == y.value;
    }
};

class Field {
public:
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return order_; }
    /// Monic modulus, ascending coefficients (length degree()+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Index generator() const { return generator_; }
    std::string describe() const;

    // Index-level arithmetic. These are the hot paths used by the enumeration kernels;
    // arguments must be valid indices of this field.
    Index add(Index x, Index y) const {
        if (x == 0) return y;
        if (y == 0) return x;
        const std::uint32_t lx = log_[x];
        const std::uint32_t ly = log_[y];
        const std::uint32_t d = ly >= lx ? ly - lx : ly + cycle_ - lx;
        const std::uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[lx + z];
    }
    Index neg(Index x) const { return x == 0 ? 0 : exp_[log_[x] + neg_one_log_]; }
    Index sub(Index x, Index y) const { return add(x, neg(y)); }
    Index mul(Index x, Index y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    Index inv(Index x) const;
    Index pow(Index x, std::int64_t e) const;
    /// generator^e for any integer e.
    Index exp(std::int64_t e) const;
    /// Discrete logarithm to the base generator(), in [0, order()-1).
    std::uint32_t log(Index x) const;
    /// x^p.
    Index frobenius(Index x) const;

    // Reference paths, independent of the tables: digitwise addition and schoolbook
    // polynomial multiplication reduced by the modulus.
    Index add_reference(Index x, Index y) const;
    Index mul_reference(Index x, Index y) const;

    std::vector<std::uint32_t> coeffs(Index x) const;
    Index from_coeffs(std::span<const std::uint32_t> c) const;
    /// Image of the integer c in the prime subfield.
    Index from_int(std::int64_t c) const;

    /// Tr_{p^outer / p^d}(x) for x in the subfield F_{p^outer}; outer defaults to degree().
    Index subfield_trace(Index x, unsigned d, unsigned outer = 0) const;
    /// Tr_{p^k/p}(x) as an integer in [0, p).
    std::uint32_t absolute_trace(Index x) const;
    /// x^{p^d} == x.
    bool is_in_subfield(Index x, unsigned d) const;
    /// subfield_trace(x, d) for every index x.
    std::vector<Index> trace_table(unsigned d) const;

    Element element(Index x) const;
    Element zero() const { return {this, 0}; }
    Element one() const { return {this, 1}; }
    Element primitive() const { return {this, generator_}; }

private:
    friend std::shared_ptr<const Field> build_field(unsigned p, unsigned k, std::uint64_t size_bound);
    Field(unsigned p, unsigned k);

    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    unsigned p_;
    unsigned k_;
    std::uint32_t order_;
    std::uint32_t cycle_;  // order_ - 1
    std::uint32_t neg_one_log_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> digit_weight_;  // p^i
    Index generator_ = 0;
    std::vector<Index> exp_;          // length 2*cycle_, exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::uint32_t> zech_; // zech_[i] = log(1 + g^i) or kNoLog
};

/// Deterministic construction of F_{p^k}: lexicographically smallest monic irreducible
/// modulus and lexicographically smallest primitive element.
std::shared_ptr<const Field> build_field(unsigned p, unsigned k,
                                         std::uint64_t size_bound = kDefaultSizeBound);

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p (ascending coefficients) via Rabin's test.
bool is_irreducible(std::span<const std::uint32_t> monic, unsigned p);

// Checked element arithmetic.
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);
Element operator/(const Element& x, const Element& y);
Element inv(const Element& x);
Element pow(const Element& x, std::int64_t e);
std::uint32_t discrete_log(const Element& x);
Element subfield_trace(const Element& x, unsigned d);
bool is_in_subfield(const Element& x, unsigned d);

}  // namespace tracecodes::gf
