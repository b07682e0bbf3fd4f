#include "tracecodes/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace tracecodes::cyclo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_divides_r_minus_1(const gf::Field& F, std::uint64_t N) {
    if (N == 0 || (F.order() - 1) % N != 0)
        throw InvalidArgument("N = " + std::to_string(N) + " must divide r - 1 = " + std::to_string(F.order() - 1));
}

BigInt ipow(std::uint64_t base, unsigned e) {
    BigInt out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::optional<BigInt> divide_exact(const BigInt& num, std::int64_t den) {
    if (num % den != 0) return std::nullopt;
    return num / den;
}

// Sorted (value, multiplicity) list from integer numerators over a common denominator.
std::optional<std::vector<RationalRoot>> make_roots(const std::vector<std::pair<BigInt, unsigned>>& numerators,
                                                    std::int64_t den) {
    std::map<BigInt, unsigned> acc;
    for (const auto& [num, mult] : numerators) {
        auto v = divide_exact(num, den);
        if (!v) return std::nullopt;
        acc[*v] += mult;
    }
    std::vector<RationalRoot> out;
    for (const auto& [v, mult] : acc) out.push_back({v, mult});
    return out;
}

std::vector<BigInt> expand_roots(const std::vector<RationalRoot>& roots) {
    std::vector<BigInt> out;
    for (const auto& root : roots)
        for (unsigned i = 0; i < root.multiplicity; ++i) out.push_back(root.value);
    return out;
}

std::vector<std::complex<double>> numeric_of(const std::vector<RationalRoot>& roots) {
    std::vector<std::complex<double>> out;
    for (const auto& root : roots)
        for (unsigned i = 0; i < root.multiplicity; ++i) out.emplace_back(root.value.convert_to<double>(), 0.0);
    return out;
}

// Greedy multiset matching of numeric values within tolerance.
bool numeric_multiset_equal(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const auto& y) { return std::abs(x - y) < tol; });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

bool matches_periods(const std::vector<RationalRoot>& roots, const std::vector<CyclotomicInteger>& periods) {
    std::vector<BigInt> exact;
    for (const auto& eta : periods) {
        if (!eta.is_rational()) return false;
        exact.push_back(eta.rational_value());
    }
    std::sort(exact.begin(), exact.end());
    return exact == expand_roots(roots);
}

}  // namespace

CyclotomicInteger additive_character(const gf::Element& x) {
    if (x.field == nullptr) throw FieldMismatch("element is not bound to a field");
    return CyclotomicInteger::zeta_power(x.field->characteristic(), x.field->absolute_trace(x.value));
}

CyclotomicInteger theta(const gf::Field& F, std::span<const gf::Index> y) {
    std::vector<std::int64_t> counts(F.characteristic(), 0);
    for (gf::Index v : y) ++counts[F.absolute_trace(v)];
    return CyclotomicInteger::from_exponent_counts(F.characteristic(), counts);
}

std::complex<double> multiplicative_character(const gf::Field& F, std::uint64_t j, gf::Index x) {
    const std::uint64_t cycle = F.order() - 1;
    if (j >= std::max<std::uint64_t>(cycle, 1)) throw InvalidArgument("character index j must lie in [0, q-2]");
    if (x == 0) throw ArithmeticError("multiplicative character of zero");
    const std::uint64_t t = j * F.log(x) % cycle;
    return std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(cycle));
}

std::complex<double> gauss_sum_numeric(const gf::Field& F, std::uint64_t j) {
    const std::uint64_t cycle = F.order() - 1;
    if (j >= std::max<std::uint64_t>(cycle, 1)) throw InvalidArgument("character index j must lie in [0, q-2]");
    const unsigned p = F.characteristic();
    std::complex<double> sum = 0;
    for (gf::Index c = 1; c < F.order(); ++c) {
        const double a = static_cast<double>(j * F.log(c) % cycle) / static_cast<double>(cycle) +
                         static_cast<double>(F.absolute_trace(c)) / p;
        sum += std::polar(1.0, kTwoPi * a);
    }
    return sum;
}

CyclotomicInteger quadratic_gauss_sum_exact(const gf::Field& F) {
    const unsigned p = F.characteristic();
    if (p == 2) throw InvalidArgument("the quadratic character needs odd q");
    std::vector<std::int64_t> counts(p, 0);
    for (gf::Index c = 1; c < F.order(); ++c) counts[F.absolute_trace(c)] += (F.log(c) % 2 == 0) ? 1 : -1;
    return CyclotomicInteger::from_exponent_counts(p, counts);
}

std::complex<double> quadratic_gauss_sum_closed_form(const gf::Field& F) {
    const unsigned p = F.characteristic();
    if (p == 2) throw InvalidArgument("the quadratic character needs odd q");
    const unsigned s = F.degree();
    const double root_q = std::sqrt(static_cast<double>(F.order()));
    const double sign = (s % 2 == 1) ? 1.0 : -1.0;  // (-1)^{s-1}
    if (p % 4 == 1) return {sign * root_q, 0.0};
    static constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return sign * kIPowers[s % 4] * root_q;
}

QuadraticSumIdentity quadratic_sum_identity(const gf::Field& F, gf::Index a2, gf::Index a1, gf::Index a0) {
    const unsigned p = F.characteristic();
    if (p == 2) throw InvalidArgument("quadratic character sums need odd q");
    if (a2 == 0) throw InvalidArgument("leading coefficient a2 must be nonzero");

    std::vector<std::int64_t> counts(p, 0);
    for (gf::Index c = 0; c < F.order(); ++c) {
        const gf::Index fc = F.add(F.add(F.mul(a2, F.mul(c, c)), F.mul(a1, c)), a0);
        ++counts[F.absolute_trace(fc)];
    }
    const auto direct = CyclotomicInteger::from_exponent_counts(p, counts);

    const gf::Index four_a2 = F.mul(F.from_int(4), a2);
    const gf::Index arg = F.sub(a0, F.mul(F.mul(a1, a1), F.inv(four_a2)));
    const BigInt eta_a2 = (F.log(a2) % 2 == 0) ? 1 : -1;
    const auto rhs = CyclotomicInteger::zeta_power(p, F.absolute_trace(arg)) * quadratic_gauss_sum_exact(F) * eta_a2;

    QuadraticSumIdentity out;
    out.direct = direct.to_complex();
    out.closed_form = rhs.to_complex();
    out.holds = std::abs(out.direct - out.closed_form) < 1e-9;
    return out;
}

bool quadratic_sum_identity_check(const gf::Field& F, gf::Index a2, gf::Index a1, gf::Index a0) {
    return quadratic_sum_identity(F, a2, a1, a0).holds;
}

std::uint64_t cyclotomic_class(const gf::Element& x, std::uint64_t N) {
    if (x.field == nullptr) throw FieldMismatch("element is not bound to a field");
    require_divides_r_minus_1(*x.field, N);
    return gf::discrete_log(x) % N;
}

bool multiset_product_check(const gf::Field& F, unsigned s, std::uint64_t e, std::uint64_t work_budget) {
    const unsigned k = F.degree();
    if (s == 0 || k % s != 0) throw InvalidArgument("s must divide the field degree");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) q *= F.characteristic();
    if (e == 0 || (q - 1) % e != 0) throw InvalidArgument("e must divide q - 1");
    const std::uint64_t r = F.order();
    const std::uint64_t m = k / s;
    const std::uint64_t N = std::gcd(m, e);
    if ((q - 1) * ((r - 1) / e) > work_budget) throw BudgetExceeded("multiset check exceeds the work budget");

    std::vector<gf::Index> base_units;
    for (gf::Index x = 1; x < r; ++x)
        if (F.is_in_subfield(x, s)) base_units.push_back(x);
    if (base_units.size() != q - 1) return false;

    std::vector<std::uint64_t> multiplicity(r - 1, 0);
    for (std::uint64_t i = 0; i < (r - 1) / e; ++i) {
        const gf::Index y = F.exp(static_cast<std::int64_t>(e * i));
        for (gf::Index x : base_units) ++multiplicity[F.log(F.mul(x, y))];
    }
    const std::uint64_t expected = (q - 1) / e * N;
    for (std::uint64_t l = 0; l < r - 1; ++l) {
        const std::uint64_t want = (l % N == 0) ? expected : 0;
        if (multiplicity[l] != want) return false;
    }
    return true;
}

std::vector<CyclotomicInteger> gaussian_periods(const gf::Field& F, std::uint64_t N) {
    require_divides_r_minus_1(F, N);
    const unsigned p = F.characteristic();
    if (N * p > (std::uint64_t{1} << 28)) throw BudgetExceeded("too many classes for exact period tables");
    std::vector<std::int64_t> counts(N * p, 0);
    for (gf::Index x = 1; x < F.order(); ++x) ++counts[(F.log(x) % N) * p + F.absolute_trace(x)];
    std::vector<CyclotomicInteger> out;
    out.reserve(N);
    for (std::uint64_t i = 0; i < N; ++i)
        out.push_back(CyclotomicInteger::from_exponent_counts(p, std::span(counts).subspan(i * p, p)));
    return out;
}

CyclotomicInteger gaussian_period_exact(const gf::Field& F, std::uint64_t N, std::uint64_t i) {
    require_divides_r_minus_1(F, N);
    if (i >= N) throw InvalidArgument("class index must lie in [0, N)");
    return gaussian_periods(F, N)[i];
}

BigInt PeriodPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

CyclotomicInteger PeriodPolynomial::evaluate(const CyclotomicInteger& x) const {
    const unsigned p = x.prime();
    CyclotomicInteger acc(p);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + CyclotomicInteger::rational(p, coeffs[i]);
    return acc;
}

std::vector<BigInt> PeriodPolynomial::integer_roots() const {
    std::vector<BigInt> c = coeffs;
    std::vector<BigInt> roots;
    auto deflate = [&c](const BigInt& x) {
        // c(X) = (X - x) b(X)
        std::vector<BigInt> b(c.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            carry = c[i + 1] + x * carry;
            b[i] = carry;
        }
        c = std::move(b);
    };
    auto eval = [&c](const BigInt& x) {
        BigInt acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    while (c.size() > 1 && c[0] == 0) {
        roots.push_back(0);
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        // Every integer root divides the (nonzero) constant term; Gaussian periods also obey |eta| <= (r-1)/N.
        BigInt limit = abs_big(c[0]);
        if (r > 1 && N > 0) limit = std::min(limit, BigInt((r - 1) / N));
        for (BigInt d = 1; d <= limit && c.size() > 1; ++d) {
            if (c[0] % d != 0) continue;
            for (const BigInt& x : {BigInt(-d), d}) {
                while (c.size() > 1 && eval(x) == 0) {
                    roots.push_back(x);
                    deflate(x);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string PeriodPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const BigInt& c = coeffs[i];
        if (c == 0) continue;
        const BigInt a = abs_big(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || i == 0) os << a;
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
    }
    return first ? "0" : os.str();
}

PeriodPolynomial expand_period_polynomial(std::span<const CyclotomicInteger> periods, std::uint64_t r) {
    if (periods.empty()) throw InvalidArgument("period polynomial needs at least one period");
    const unsigned p = periods.front().prime();
    std::vector<CyclotomicInteger> c{CyclotomicInteger::rational(p, 1)};
    for (const auto& eta : periods) {
        std::vector<CyclotomicInteger> next(c.size() + 1, CyclotomicInteger(p));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * eta;
        }
        c = std::move(next);
    }
    PeriodPolynomial out;
    out.N = periods.size();
    out.r = r;
    for (const auto& coeff : c) {
        if (!coeff.is_rational())
            throw ArithmeticError("period polynomial coefficient " + coeff.to_string() + " is not an integer");
        out.coeffs.push_back(coeff.rational_value());
    }
    return out;
}

PeriodPolynomial period_polynomial(const gf::Field& F, std::uint64_t N, std::uint64_t work_budget) {
    require_divides_r_minus_1(F, N);
    const auto periods = gaussian_periods(F, N);
    const bool all_rational = std::all_of(periods.begin(), periods.end(), [](const auto& x) { return x.is_rational(); });
    const std::uint64_t width = F.characteristic() - 1;
    const std::uint64_t cost = N * N * (all_rational ? width : width * width);
    if (cost > work_budget) throw BudgetExceeded("period polynomial expansion exceeds the work budget");
    return expand_period_polynomial(periods, F.order());
}

PeriodPolynomial cubic_period_polynomial_formula(std::uint64_t r, std::int64_t c) {
    if (r % 3 != 1) throw InvalidArgument("cubic period polynomial needs r = 1 (mod 3)");
    const BigInt R = r;
    const auto c1 = divide_exact(R - 1, 3);
    const auto c0 = divide_exact((BigInt(c) + 3) * R - 1, 27);
    if (!c1 || !c0) throw ArithmeticError("cubic period polynomial formula is not integral");
    return {3, r, {-*c0, -*c1, 1, 1}};
}

PeriodPolynomial quartic_period_polynomial_formula(std::uint64_t r, std::int64_t u) {
    if (r % 4 != 1) throw InvalidArgument("quartic period polynomial needs r = 1 (mod 4)");
    const BigInt R = r;
    const BigInt U = u;
    std::optional<BigInt> c2, c1, c0;
    if (((r - 1) / 4) % 2 == 0) {
        c2 = divide_exact(-(3 * R - 3), 8);
        c1 = divide_exact((2 * U - 3) * R + 1, 16);
        c0 = divide_exact(R * R - (4 * U * U - 8 * U + 6) * R + 1, 256);
    } else {
        c2 = divide_exact(R + 3, 8);
        c1 = divide_exact((2 * U + 1) * R + 1, 16);
        c0 = divide_exact(9 * R * R - (4 * U * U - 8 * U - 2) * R + 1, 256);
    }
    if (!c2 || !c1 || !c0) throw ArithmeticError("quartic period polynomial formula is not integral");
    return {4, r, {*c0, *c1, *c2, 1, 1}};
}

std::complex<double> QuadraticSurd::value() const {
    const double root = std::sqrt(std::abs(static_cast<double>(radicand)));
    const std::complex<double> rad = radicand < 0 ? std::complex<double>(0, root) : std::complex<double>(root, 0);
    return (a.convert_to<double>() + b.convert_to<double>() * rad) / static_cast<double>(denominator);
}

std::string QuadraticSurd::to_string() const {
    std::ostringstream os;
    os << "(" << a << (b < 0 ? " - " : " + ");
    const BigInt mag = abs_big(b);
    if (mag != 1) os << mag << "*";
    os << "sqrt(" << radicand << "))/" << denominator;
    return os.str();
}

ClosedFormPeriods closed_form_periods(const gf::Field& F, unsigned s, std::uint64_t N) {
    if (N < 2 || N > 4) throw InvalidArgument("closed forms exist only for N = 2, 3, 4");
    require_divides_r_minus_1(F, N);
    const unsigned p = F.characteristic();
    const unsigned k = F.degree();
    if (s == 0 || k % s != 0) throw InvalidArgument("s must divide the field degree");
    const unsigned m = k / s;
    const std::uint64_t r = F.order();

    ClosedFormPeriods out;
    out.N = N;
    out.r = r;
    out.p = p;
    out.sm = k;
    const auto exact = gaussian_periods(F, N);

    auto finish_rational = [&](std::vector<RationalRoot> roots) {
        out.rational = true;
        out.roots = std::move(roots);
        out.numeric_roots = numeric_of(out.roots);
        out.matches_exact = matches_periods(out.roots, exact);
    };

    if (N == 2) {
        if (k % 2 == 0) {
            const BigInt S = ipow(p, k / 2);
            // eta_0 = (-1 + eps sqrt(r))/2 with eps = (-1)^{sm-1} (p = 1 mod 4) or (-1)^{sm-1} i^{sm} (p = 3 mod 4)
            const int eps = (p % 4 == 1) ? -1 : ((k / 2) % 2 == 0 ? -1 : 1);
            const BigInt eta0 = (-1 + eps * S) / 2;
            out.case_label = "N=2, sm even";
            out.factorization = "(X - eta0)(X + 1 + eta0), eta0 = (-1 " + std::string(eps < 0 ? "-" : "+") + " sqrt(r))/2";
            finish_rational(*make_roots({{2 * eta0, 1}, {2 * (-1 - eta0), 1}}, 2));
        } else {
            out.case_label = "N=2, sm odd";
            out.rational = false;
            const std::int64_t rad = (p % 4 == 1) ? static_cast<std::int64_t>(r) : -static_cast<std::int64_t>(r);
            const int sign = (p % 4 == 1) ? 1 : (k % 4 == 1 ? 1 : -1);
            out.surd_roots = {{-1, sign, rad, 2}, {-1, -sign, rad, 2}};
            out.factorization = "(X - " + out.surd_roots[0].to_string() + ")(X - " + out.surd_roots[1].to_string() + ")";
            for (const auto& sr : out.surd_roots) out.numeric_roots.push_back(sr.value());
            std::vector<std::complex<double>> ex;
            for (const auto& eta : exact) ex.push_back(eta.to_complex());
            out.matches_exact = numeric_multiset_equal(out.numeric_roots, ex, 1e-6);
        }
        return out;
    }

    if (N == 3) {
        try {
            out.norm_solution = solve_diophantine(DiophantineKind::CubicFourR, p, r);
        } catch (const ArithmeticError&) {
        }
        if (p % 3 == 2) {
            const BigInt S = ipow(p, k / 2);
            if ((k / 2) % 2 == 0) {
                out.case_label = "N=3 (a), sm/2 even";
                out.factorization = "3^-3 (3X+1+2sqrt(r))(3X+1-sqrt(r))^2";
                finish_rational(*make_roots({{-1 - 2 * S, 1}, {-1 + S, 2}}, 3));
            } else {
                out.case_label = "N=3 (a), sm/2 odd";
                out.factorization = "3^-3 (3X+1-2sqrt(r))(3X+1+sqrt(r))^2";
                finish_rational(*make_roots({{-1 + 2 * S, 1}, {-1 - S, 2}}, 3));
            }
            return out;
        }
        if (k % 3 != 0)
            throw CaseMismatch("N=3 case (b): p = 1 (mod 3) and 3 does not divide sm, the period polynomial is "
                               "irreducible over the rationals");

        out.case_label = "N=3 (c), sm = 0 (mod 3)";
        out.factorization = "27^-1 (3X+1-c1 r^(1/3))(3X+1+(c1+9d1)/2 r^(1/3))(3X+1+(c1-9d1)/2 r^(1/3))";
        const BigInt R = ipow(p, k / 3);
        auto roots_for = [&](std::uint64_t n) -> std::pair<std::optional<std::vector<RationalRoot>>, DiophantineSolution> {
            const auto sol = solve_diophantine(DiophantineKind::CubicFourRoot, p, n);
            const BigInt c1 = sol.first, d1 = sol.second;
            const BigInt plus = (c1 + 9 * d1), minus = (c1 - 9 * d1);
            if (plus % 2 != 0 || minus % 2 != 0) return {std::nullopt, sol};
            return {make_roots({{-1 + c1 * R, 1}, {-1 - plus / 2 * R, 1}, {-1 - minus / 2 * R, 1}}, 3), sol};
        };
        const std::uint64_t n_scaled = static_cast<std::uint64_t>(R);
        auto [scaled, scaled_sol] = roots_for(n_scaled);
        std::optional<std::vector<RationalRoot>> literal;
        std::optional<DiophantineSolution> literal_sol;
        if (m % 3 == 0) {
            const std::uint64_t n_literal = static_cast<std::uint64_t>(ipow(p, m / 3));
            if (n_literal != n_scaled) {
                try {
                    auto [roots, sol] = roots_for(n_literal);
                    literal = roots;
                    literal_sol = sol;
                } catch (const ArithmeticError&) {
                }
            }
        }
        const bool scaled_ok = scaled && matches_periods(*scaled, exact);
        const bool literal_ok = literal && matches_periods(*literal, exact);
        if (literal_ok && !scaled_ok) {
            out.reading = "literal p^(m/3)";
            out.root_solution = literal_sol;
            finish_rational(*literal);
            if (scaled) out.alternate_roots = *scaled;
            out.alternate_reading = "r-scaled p^(sm/3)";
        } else {
            out.reading = "r-scaled p^(sm/3)";
            out.root_solution = scaled_sol;
            if (scaled) {
                finish_rational(*scaled);
            }
            if (literal) {
                out.alternate_roots = *literal;
                out.alternate_reading = "literal p^(m/3)";
            }
        }
        out.readings_diverge = literal.has_value() && scaled.has_value() && *literal != *scaled;
        return out;
    }

    // N == 4
    try {
        out.norm_solution = solve_diophantine(DiophantineKind::QuarticR, p, r);
    } catch (const ArithmeticError&) {
    }
    if (p % 4 == 3) {
        const BigInt S = ipow(p, k / 2);
        if ((k / 2) % 2 == 0) {
            out.case_label = "N=4 (a), sm/2 even";
            out.factorization = "4^-4 (4X+1+3sqrt(r))(4X+1-sqrt(r))^3";
            finish_rational(*make_roots({{-1 - 3 * S, 1}, {-1 + S, 3}}, 4));
        } else {
            out.case_label = "N=4 (a), sm/2 odd";
            out.factorization = "4^-4 (4X+1-3sqrt(r))(4X+1+sqrt(r))^3";
            finish_rational(*make_roots({{-1 + 3 * S, 1}, {-1 - S, 3}}, 4));
        }
        return out;
    }
    if (k % 2 == 1)
        throw CaseMismatch("N=4 case (b): p = 1 (mod 4) and sm odd, the period polynomial is irreducible over the rationals");

    if (k % 4 == 2) {
        out.case_label = "N=4 (c), sm = 2 (mod 4)";
        out.factorization = "4^-4 ((4X+1)^2+2sqrt(r)(4X+1)-r-2u sqrt(r))((4X+1)^2-2sqrt(r)(4X+1)-r+2u sqrt(r))";
        out.rational = false;
        if (!out.norm_solution) throw ArithmeticError("no normalized solution of r = u^2 + 4v^2");
        const double S = std::sqrt(static_cast<double>(r));
        const double u = static_cast<double>(out.norm_solution->first);
        const double rr = static_cast<double>(r);
        const double d1 = std::sqrt(2 * rr + 2 * u * S);
        const double d2 = std::sqrt(2 * rr - 2 * u * S);
        for (double y : {-S + d1, -S - d1, S + d2, S - d2}) out.numeric_roots.emplace_back((y - 1) / 4, 0.0);
        std::vector<std::complex<double>> ex;
        for (const auto& eta : exact) ex.push_back(eta.to_complex());
        out.matches_exact = numeric_multiset_equal(out.numeric_roots, ex, 1e-6);
        return out;
    }

    out.case_label = "N=4 (d), sm = 0 (mod 4)";
    out.factorization =
        "4^-4 (4X+1+sqrt(r)+2r^(1/4)u1)(4X+1+sqrt(r)-2r^(1/4)u1)(4X+1-sqrt(r)+4r^(1/4)v1)(4X+1-sqrt(r)-4r^(1/4)v1)";
    const BigInt S = ipow(p, k / 2);
    const BigInt R4 = ipow(p, k / 4);
    auto roots_for = [&](std::uint64_t n) -> std::pair<std::optional<std::vector<RationalRoot>>, DiophantineSolution> {
        const auto sol = solve_diophantine(DiophantineKind::QuarticRoot, p, n);
        const BigInt u1 = sol.first, v1 = sol.second;
        return {make_roots({{-1 - S - 2 * R4 * u1, 1},
                            {-1 - S + 2 * R4 * u1, 1},
                            {-1 + S + 4 * R4 * v1, 1},
                            {-1 + S - 4 * R4 * v1, 1}},
                           4),
                sol};
    };
    const std::uint64_t n_scaled = static_cast<std::uint64_t>(S);
    auto [scaled, scaled_sol] = roots_for(n_scaled);
    std::optional<std::vector<RationalRoot>> literal;
    std::optional<DiophantineSolution> literal_sol;
    if (m % 2 == 0) {
        const std::uint64_t n_literal = static_cast<std::uint64_t>(ipow(p, m / 2));
        if (n_literal != n_scaled) {
            try {
                auto [roots, sol] = roots_for(n_literal);
                literal = roots;
                literal_sol = sol;
            } catch (const ArithmeticError&) {
            }
        }
    }
    const bool scaled_ok = scaled && matches_periods(*scaled, exact);
    const bool literal_ok = literal && matches_periods(*literal, exact);
    if (literal_ok && !scaled_ok) {
        out.reading = "literal p^(m/2)";
        out.root_solution = literal_sol;
        finish_rational(*literal);
        if (scaled) out.alternate_roots = *scaled;
        out.alternate_reading = "r-scaled p^(sm/2)";
    } else {
        out.reading = "r-scaled p^(sm/2)";
        out.root_solution = scaled_sol;
        if (scaled) finish_rational(*scaled);
        if (literal) {
            out.alternate_roots = *literal;
            out.alternate_reading = "literal p^(m/2)";
        }
    }
    out.readings_diverge = literal.has_value() && scaled.has_value() && *literal != *scaled;
    return out;
}

}  // namespace tracecodes::cyclo
