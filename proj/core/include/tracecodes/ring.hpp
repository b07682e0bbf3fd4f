#pragma once

// The chain ring F_r + uF_r (u^2 = 0) over the base ring R = F_q + uF_q, q = p^s, r = q^m.
//
// Both rings share one field object for F_r. Elements of R are elements of the extension
// whose two components lie in the subfield F_q; there is no separate type for them.

#include <cstdint>
#include <memory>

#include "tracecodes/gf.hpp"

namespace tracecodes::ring {

/// a + u b
struct RingElement {
    gf::Element a;
    gf::Element b;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);
/// (a + ub)(c + ud) = ac + u(ad + bc)
RingElement operator*(const RingElement& x, const RingElement& y);

bool is_unit(const RingElement& x);
/// (a + ub)^{-1} = a^{-1} - u b a^{-2}; throws ArithmeticError for non-units.
RingElement inverse(const RingElement& x);

/// F(a + ub) = a^q + u b^q, where q is a power of the characteristic.
RingElement frobenius(const RingElement& x, std::uint64_t q);

class Extension {
public:
    /// Base ring R = F_{p^s} + uF_{p^s}; s must divide the degree of `field`.
    Extension(std::shared_ptr<const gf::Field> field, unsigned s);

    const gf::Field& field() const { return *field_; }
    const std::shared_ptr<const gf::Field>& field_ptr() const { return field_; }
    unsigned s() const { return s_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t r() const { return field_->order(); }

    RingElement make(gf::Index a, gf::Index b) const;
    RingElement zero() const { return make(0, 0); }
    RingElement one() const { return make(1, 0); }
    RingElement u() const { return make(0, 1); }

    RingElement frobenius(const RingElement& x) const;
    /// sum_{j<m} F^j(x) = Tr_{r/q}(a) + u Tr_{r/q}(b)
    RingElement trace(const RingElement& x) const;
    /// Both components in F_q.
    bool in_base_ring(const RingElement& x) const;

private:
    std::shared_ptr<const gf::Field> field_;
    unsigned s_;
    unsigned m_;
    std::uint64_t q_;
};

}  // namespace tracecodes::ring
