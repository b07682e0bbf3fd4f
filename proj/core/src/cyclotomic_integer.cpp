#include "tracecodes/cyclotomic_integer.hpp"

#include <numbers>
#include <sstream>

namespace tracecodes::cyclo {

CyclotomicInteger::CyclotomicInteger(unsigned p) : p_(p), coords_(p >= 2 ? p - 1 : 0) {
    if (p < 2) throw InvalidArgument("cyclotomic integers need a prime p >= 2");
}

CyclotomicInteger CyclotomicInteger::rational(unsigned p, const BigInt& c) {
    CyclotomicInteger x(p);
    x.coords_[0] = c;
    return x;
}

CyclotomicInteger CyclotomicInteger::zeta_power(unsigned p, std::uint64_t j) {
    CyclotomicInteger x(p);
    const std::uint64_t e = j % p;
    if (e == p - 1) {
        for (auto& c : x.coords_) c = -1;
    } else {
        x.coords_[e] = 1;
    }
    return x;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(unsigned p, std::span<const std::int64_t> counts) {
    if (counts.size() != p) throw InvalidArgument("exponent counts must have length p");
    CyclotomicInteger x(p);
    const std::int64_t top = counts[p - 1];
    for (unsigned j = 0; j + 1 < p; ++j) x.coords_[j] = BigInt(counts[j]) - top;
    return x;
}

bool CyclotomicInteger::is_rational() const {
    for (std::size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

BigInt CyclotomicInteger::rational_value() const {
    if (!is_rational()) throw ArithmeticError("cyclotomic integer " + to_string() + " is not rational");
    return coords_[0];
}

std::complex<double> CyclotomicInteger::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / p_;
        z += coords_[j].convert_to<double>() * std::polar(1.0, angle);
    }
    return z;
}

std::string CyclotomicInteger::to_string() const {
    if (is_rational()) return coords_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const BigInt& c = coords_[j];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt a = c < 0 ? BigInt(-c) : c;
        if (j == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "z^" << j;
        }
    }
    return os.str();
}

void CyclotomicInteger::require_same_prime(const CyclotomicInteger& o) const {
    if (p_ != o.p_) throw InvalidArgument("cyclotomic integers over different primes");
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
    require_same_prime(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
    require_same_prime(o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const BigInt& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y) {
    x.require_same_prime(y);
    if (x.is_rational()) return y * x.coords_[0];
    if (y.is_rational()) return x * y.coords_[0];
    const unsigned p = x.p_;
    // Multiply modulo zeta^p = 1, then fold the zeta^{p-1} coordinate back into the basis.
    std::vector<BigInt> full(p);
    for (unsigned i = 0; i + 1 < p; ++i) {
        if (x.coords_[i] == 0) continue;
        for (unsigned j = 0; j + 1 < p; ++j) {
            if (y.coords_[j] == 0) continue;
            full[(i + j) % p] += x.coords_[i] * y.coords_[j];
        }
    }
    CyclotomicInteger out(p);
    for (unsigned j = 0; j + 1 < p; ++j) out.coords_[j] = full[j] - full[p - 1];
    return out;
}

}  // namespace tracecodes::cyclo
