#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracecodes/errors.hpp"

namespace tracecodes::cyclo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[zeta_p], stored as integer coordinates over the basis
/// {zeta^0, ..., zeta^{p-2}}. zeta^{p-1} is rewritten as -(1 + zeta + ... + zeta^{p-2}),
/// so the representation is unique and a value is rational iff coords[1..] are zero.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(unsigned p);

    static CyclotomicInteger rational(unsigned p, const BigInt& c);
    /// zeta^j for any non-negative j.
    static CyclotomicInteger zeta_power(unsigned p, std::uint64_t j);
    /// sum_j counts[j] zeta^j over j = 0..p-1.
    static CyclotomicInteger from_exponent_counts(unsigned p, std::span<const std::int64_t> counts);

    unsigned prime() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    bool is_rational() const;
    /// Integer value; throws ArithmeticError when the element is not rational.
    BigInt rational_value() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    CyclotomicInteger& operator+=(const CyclotomicInteger& o);
    CyclotomicInteger& operator-=(const CyclotomicInteger& o);
    CyclotomicInteger& operator*=(const BigInt& c);

    friend CyclotomicInteger operator+(CyclotomicInteger x, const CyclotomicInteger& y) { return x += y; }
    friend CyclotomicInteger operator-(CyclotomicInteger x, const CyclotomicInteger& y) { return x -= y; }
    friend CyclotomicInteger operator*(CyclotomicInteger x, const BigInt& c) { return x *= c; }
    friend CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y);
    friend bool operator==(const CyclotomicInteger& x, const CyclotomicInteger& y) {
        return x.p_ == y.p_ && x.coords_ == y.coords_;
    }

private:
    void require_same_prime(const CyclotomicInteger& o) const;

    unsigned p_;
    std::vector<BigInt> coords_;
};

}  // namespace tracecodes::cyclo
