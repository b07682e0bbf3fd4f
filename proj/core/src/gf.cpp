#include "tracecodes/gf.hpp"

#include <algorithm>
#include <sstream>

namespace tracecodes::gf {

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned k, std::uint64_t bound) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n > bound / p) return 0;
        n *= p;
    }
    return n <= bound ? n : 0;
}

void require_same_field(const Element& x, const Element& y) {
    if (x.field == nullptr || y.field == nullptr) throw FieldMismatch("element is not bound to a field");
    if (x.field != y.field) throw FieldMismatch("operands belong to different fields");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(std::span<const std::uint32_t> monic, unsigned p) {
    if (monic.size() < 2 || monic.back() != 1) throw InvalidArgument("is_irreducible expects a monic polynomial of degree >= 1");
    const std::size_t k = monic.size() - 1;
    if (k == 1) return true;
    const Poly f(monic.begin(), monic.end());
    if (f[0] == 0) return false;

    // frob[i] = x^{p^i} mod f
    std::vector<Poly> frob(k + 1);
    frob[0] = poly_mod(Poly{0, 1}, f, p);
    for (std::size_t i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);

    const Poly x = poly_mod(Poly{0, 1}, f, p);
    if (poly_sub(frob[k], x, p).size() != 0) return false;
    for (std::uint64_t l : prime_factors(k)) {
        const Poly g = poly_gcd(f, poly_sub(frob[k / l], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

Field::Field(unsigned p, unsigned k)
    : p_(p), k_(k), order_(0), cycle_(0), neg_one_log_(0) {}

std::shared_ptr<const Field> build_field(unsigned p, unsigned k, std::uint64_t size_bound) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidArgument("extension degree must be at least 1");
    const std::uint64_t order = checked_power(p, k, size_bound);
    if (order == 0)
        throw InvalidArgument("field size " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds the size bound " + std::to_string(size_bound));

    std::shared_ptr<Field> F(new Field(p, k));
    F->order_ = static_cast<std::uint32_t>(order);
    F->cycle_ = F->order_ - 1;
    F->neg_one_log_ = (p == 2) ? 0 : F->cycle_ / 2;
    F->digit_weight_.resize(k);
    for (unsigned i = 0; i < k; ++i) F->digit_weight_[i] = i == 0 ? 1 : F->digit_weight_[i - 1] * p;

    // Modulus: smallest index N whose digits give an irreducible x^k + sum c_i x^i.
    std::vector<std::uint32_t> candidate(k + 1, 0);
    candidate[k] = 1;
    bool found = false;
    for (std::uint64_t n = 0; n < order && !found; ++n) {
        std::uint64_t t = n;
        for (unsigned i = 0; i < k; ++i) {
            candidate[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible(candidate, p)) found = true;
    }
    if (!found) throw ArithmeticError("no irreducible polynomial found");  // unreachable for valid p, k
    F->modulus_ = candidate;

    // Generator: smallest index of multiplicative order p^k - 1.
    const auto factors = prime_factors(F->cycle_);
    auto pow_ref = [&](Index x, std::uint64_t e) {
        Index result = 1;
        while (e) {
            if (e & 1) result = F->mul_reference(result, x);
            x = F->mul_reference(x, x);
            e >>= 1;
        }
        return result;
    };
    F->generator_ = 0;
    for (Index cand = 1; cand < F->order_; ++cand) {
        bool primitive = true;
        for (auto l : factors) {
            if (pow_ref(cand, F->cycle_ / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            F->generator_ = cand;
            break;
        }
    }
    if (F->generator_ == 0) throw ArithmeticError("no primitive element found");

    F->exp_.resize(2 * static_cast<std::size_t>(F->cycle_));
    F->log_.assign(F->order_, Field::kNoLog);
    Index x = 1;
    for (std::uint32_t i = 0; i < F->cycle_; ++i) {
        if (F->log_[x] != Field::kNoLog) throw ArithmeticError("generator order is smaller than p^k - 1");
        F->exp_[i] = x;
        F->exp_[i + F->cycle_] = x;
        F->log_[x] = i;
        x = F->mul_reference(x, F->generator_);
    }

    F->zech_.resize(F->cycle_);
    for (std::uint32_t i = 0; i < F->cycle_; ++i) {
        const Index s = F->add_reference(1, F->exp_[i]);
        F->zech_[i] = s == 0 ? Field::kNoLog : F->log_[s];
    }
    return F;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << p_ << "^" << k_ << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (modulus_[i] != 1 || i == 0) os << modulus_[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Index Field::inv(Index x) const {
    if (x == 0) throw ArithmeticError("inversion of zero");
    const std::uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : cycle_ - l];
}

Index Field::pow(Index x, std::int64_t e) const {
    if (x == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw ArithmeticError("negative power of zero");
    }
    std::int64_t em = e % static_cast<std::int64_t>(cycle_);
    if (em < 0) em += cycle_;
    const std::uint64_t l = static_cast<std::uint64_t>(log_[x]) * static_cast<std::uint64_t>(em) % cycle_;
    return exp_[l];
}

Index Field::exp(std::int64_t e) const {
    std::int64_t em = e % static_cast<std::int64_t>(cycle_);
    if (em < 0) em += cycle_;
    return exp_[static_cast<std::size_t>(em)];
}

std::uint32_t Field::log(Index x) const {
    if (x == 0) throw ArithmeticError("discrete logarithm of zero");
    if (x >= order_) throw InvalidArgument("index out of range for this field");
    return log_[x];
}

Index Field::frobenius(Index x) const {
    if (x == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[x]) * p_ % cycle_];
}

Index Field::add_reference(Index x, Index y) const {
    Index out = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t d = (x % p_ + y % p_) % p_;
        out += d * digit_weight_[i];
        x /= p_;
        y /= p_;
    }
    return out;
}

Index Field::mul_reference(Index x, Index y) const {
    const auto a = coeffs(x);
    const auto b = coeffs(y);
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    // modulus is monic: x^k = -sum_{i<k} m_i x^i
    for (std::size_t d = 2 * k_ - 1; d >= k_; --d) {
        const std::uint64_t c = prod[d];
        if (c != 0) {
            const std::size_t shift = d - k_;
            for (unsigned i = 0; i < k_; ++i) prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
            prod[d] = 0;
        }
        if (d == k_) break;
    }
    Index out = 0;
    for (unsigned i = 0; i < k_; ++i) out += static_cast<Index>(prod[i]) * digit_weight_[i];
    return out;
}

std::vector<std::uint32_t> Field::coeffs(Index x) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

Index Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > k_) throw InvalidArgument("too many coefficients for this field");
    Index out = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw InvalidArgument("coefficient out of range [0, p)");
        out += c[i] * digit_weight_[i];
    }
    return out;
}

Index Field::from_int(std::int64_t c) const {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Index>(r);
}

Index Field::subfield_trace(Index x, unsigned d, unsigned outer) const {
    if (outer == 0) outer = k_;
    if (d == 0 || outer % d != 0 || k_ % outer != 0)
        throw InvalidArgument("subfield trace requires d | outer | k");
    if (outer != k_ && !is_in_subfield(x, outer))
        throw InvalidArgument("element does not lie in the requested subfield");
    Index acc = 0;
    Index y = x;
    for (unsigned j = 0; j < outer / d; ++j) {
        acc = add(acc, y);
        for (unsigned t = 0; t < d; ++t) y = frobenius(y);
    }
    return acc;
}

std::uint32_t Field::absolute_trace(Index x) const { return subfield_trace(x, 1); }

bool Field::is_in_subfield(Index x, unsigned d) const {
    if (d == 0 || k_ % d != 0) throw InvalidArgument("subfield degree must divide the extension degree");
    Index y = x;
    for (unsigned t = 0; t < d; ++t) y = frobenius(y);
    return y == x;
}

std::vector<Index> Field::trace_table(unsigned d) const {
    if (d == 0 || k_ % d != 0) throw InvalidArgument("subfield degree must divide the extension degree");
    std::vector<Index> table(order_);
    for (Index x = 0; x < order_; ++x) table[x] = subfield_trace(x, d);
    return table;
}

Element Field::element(Index x) const {
    if (x >= order_) throw InvalidArgument("index out of range for this field");
    return {this, x};
}

Element operator+(const Element& x, const Element& y) {
    require_same_field(x, y);
    return {x.field, x.field->add(x.value, y.value)};
}

Element operator-(const Element& x, const Element& y) {
    require_same_field(x, y);
    return {x.field, x.field->sub(x.value, y.value)};
}

Element operator-(const Element& x) { return {x.field, x.field->neg(x.value)}; }

Element operator*(const Element& x, const Element& y) {
    require_same_field(x, y);
    return {x.field, x.field->mul(x.value, y.value)};
}

Element operator/(const Element& x, const Element& y) {
    require_same_field(x, y);
    return {x.field, x.field->mul(x.value, x.field->inv(y.value))};
}

Element inv(const Element& x) { return {x.field, x.field->inv(x.value)}; }

Element pow(const Element& x, std::int64_t e) { return {x.field, x.field->pow(x.value, e)}; }

std::uint32_t discrete_log(const Element& x) { return x.field->log(x.value); }

Element subfield_trace(const Element& x, unsigned d) { return {x.field, x.field->subfield_trace(x.value, d)}; }

bool is_in_subfield(const Element& x, unsigned d) { return x.field->is_in_subfield(x.value, d); }

}  // namespace tracecodes::gf
