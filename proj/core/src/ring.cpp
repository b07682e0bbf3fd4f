#include "tracecodes/ring.hpp"

namespace tracecodes::ring {

RingElement operator+(const RingElement& x, const RingElement& y) { return {x.a + y.a, x.b + y.b}; }

RingElement operator-(const RingElement& x, const RingElement& y) { return {x.a - y.a, x.b - y.b}; }

RingElement operator-(const RingElement& x) { return {-x.a, -x.b}; }

RingElement operator*(const RingElement& x, const RingElement& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}

bool is_unit(const RingElement& x) { return !x.a.is_zero(); }

RingElement inverse(const RingElement& x) {
    if (!is_unit(x)) throw ArithmeticError("element of the maximal ideal <u> has no inverse");
    const gf::Element ai = inv(x.a);
    return {ai, -(x.b * ai * ai)};
}

RingElement frobenius(const RingElement& x, std::uint64_t q) {
    const gf::Field& F = *x.a.field;
    if (x.b.field != x.a.field) throw FieldMismatch("ring element components belong to different fields");
    unsigned d = 0;
    std::uint64_t t = 1;
    while (t < q) {
        t *= F.characteristic();
        ++d;
    }
    if (t != q || d == 0 || F.degree() % d != 0)
        throw InvalidArgument("Frobenius exponent must be p^d with d dividing the field degree");
    RingElement y = x;
    for (unsigned i = 0; i < d; ++i) y = {{&F, F.frobenius(y.a.value)}, {&F, F.frobenius(y.b.value)}};
    return y;
}

Extension::Extension(std::shared_ptr<const gf::Field> field, unsigned s) : field_(std::move(field)), s_(s) {
    if (!field_) throw InvalidArgument("extension requires a field");
    if (s_ == 0 || field_->degree() % s_ != 0)
        throw InvalidArgument("base field degree s must divide the extension degree");
    m_ = field_->degree() / s_;
    q_ = 1;
    for (unsigned i = 0; i < s_; ++i) q_ *= field_->characteristic();
}

RingElement Extension::make(gf::Index a, gf::Index b) const { return {field_->element(a), field_->element(b)}; }

RingElement Extension::frobenius(const RingElement& x) const { return ring::frobenius(x, q_); }

RingElement Extension::trace(const RingElement& x) const {
    RingElement acc = zero();
    RingElement y = x;
    for (unsigned j = 0; j < m_; ++j) {
        acc = acc + y;
        y = frobenius(y);
    }
    return acc;
}

bool Extension::in_base_ring(const RingElement& x) const {
    return field_->is_in_subfield(x.a.value, s_) && field_->is_in_subfield(x.b.value, s_);
}

}  // namespace tracecodes::ring
