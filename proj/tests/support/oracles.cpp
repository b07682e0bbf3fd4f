#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tracecodes/ring.hpp"

namespace oracle {

namespace tc = tracecodes;

Poly poly_from_index(std::uint64_t index, unsigned p, unsigned len) {
    Poly out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return out;
}

std::uint64_t poly_to_index(const Poly& a, unsigned p) {
    std::uint64_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
    return idx;
}

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, unsigned p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::logic_error("no inverse");
}

Poly poly_rem(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint32_t coef = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - coef * b[i] % p) % p;
        trim(a);
    }
    return a;
}

}  // namespace

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    Poly r = poly_rem(prod, modulus, p);
    r.resize(modulus.size() - 1, 0);
    return r;
}

bool irreducible_by_trial_division(const Poly& monic, unsigned p) {
    const unsigned deg = static_cast<unsigned>(monic.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly divisor = poly_from_index(idx, p, d);
            divisor.push_back(1);
            if (poly_rem(monic, divisor, p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(unsigned p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand = poly_from_index(idx, p, k);
        cand.push_back(1);
        if (irreducible_by_trial_division(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial");
}

std::uint64_t smallest_primitive(const Poly& modulus, unsigned p) {
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) order *= p;
    const std::uint64_t cycle = order - 1;
    Poly one(k, 0);
    one[0] = 1;
    for (std::uint64_t idx = 1; idx < order; ++idx) {
        const Poly g = poly_from_index(idx, p, k);
        Poly x = g;
        std::uint64_t ord = 1;
        while (x != one) {
            x = poly_mulmod(x, g, modulus, p);
            ++ord;
        }
        if (ord == cycle) return idx;
    }
    throw std::logic_error("no primitive element");
}

std::uint32_t absolute_trace(const tc::gf::Field& F, tc::gf::Index x) {
    const unsigned p = F.characteristic();
    const unsigned k = F.degree();
    const Poly modulus(F.modulus().begin(), F.modulus().end());
    Poly y = poly_from_index(x, p, k);
    Poly acc(k, 0);
    for (unsigned j = 0; j < k; ++j) {
        for (unsigned i = 0; i < k; ++i) acc[i] = (acc[i] + y[i]) % p;
        Poly pw = y;
        for (unsigned t = 1; t < p; ++t) pw = poly_mulmod(pw, y, modulus, p);
        y = pw;
    }
    for (unsigned i = 1; i < k; ++i)
        if (acc[i] != 0) throw std::logic_error("trace left the prime field");
    return acc[0];
}

std::vector<std::complex<double>> numeric_periods(const tc::gf::Field& F, std::uint64_t N) {
    const unsigned p = F.characteristic();
    std::vector<std::complex<double>> out(N, 0.0);
    const std::uint64_t cycle = F.order() - 1;
    for (std::uint64_t j = 0; j < cycle; ++j) {
        const tc::gf::Index x = F.exp(static_cast<std::int64_t>(j));
        const double angle = 2.0 * std::numbers::pi * absolute_trace(F, x) / p;
        out[j % N] += std::polar(1.0, angle);
    }
    return out;
}

tc::code::WeightDistribution naive_spectrum(const tc::code::CodeSpec& spec) {
    auto F = tc::gf::build_field(spec.p, spec.s * spec.m);
    const tc::ring::Extension ext(F, spec.s);
    const auto g = F->primitive();
    std::vector<tc::ring::RingElement> L;
    for (std::uint64_t i = 0; i < (spec.r - 1) / spec.e; ++i) {
        const auto t = tc::gf::pow(g, static_cast<std::int64_t>(spec.e * i));
        for (tc::gf::Index tp = 0; tp < spec.r; ++tp) L.push_back({t, F->element(tp)});
    }
    tc::code::WeightDistribution dist;
    for (tc::gf::Index a = 0; a < spec.r; ++a)
        for (tc::gf::Index b = 0; b < spec.r; ++b) {
            const tc::ring::RingElement x = ext.make(a, b);
            std::uint64_t w = 0;
            for (const auto& l : L) {
                const auto c = ext.trace(x * l);
                w += (c.b.value != 0) + (F->add_reference(c.a.value, c.b.value) != 0);
            }
            dist.add(w);
        }
    return dist;
}

std::map<std::uint64_t, std::uint64_t> parse_enumerator(const std::string& text) {
    std::map<std::uint64_t, std::uint64_t> out;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
        const auto z = term.find("z^");
        if (z == std::string::npos) {
            out[0] += std::stoull(term);
            continue;
        }
        const std::uint64_t coeff = z == 0 ? 1 : std::stoull(term.substr(0, z));
        out[std::stoull(term.substr(z + 2))] += coeff;
    }
    return out;
}

std::vector<tc::code::CodeSpec> specs_up_to(std::uint64_t r_max) {
    std::vector<tc::code::CodeSpec> out;
    for (unsigned p = 2; p <= r_max; ++p) {
        if (!tc::gf::is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned s = 1; q <= r_max; ++s, q *= p) {
            std::uint64_t r = q;
            for (unsigned m = 1; r <= r_max; ++m, r *= q)
                for (std::uint64_t e = 1; e < q; ++e)
                    if ((q - 1) % e == 0) out.push_back(tc::code::CodeSpec::make(p, s, m, e));
        }
    }
    return out;
}

}  // namespace oracle
