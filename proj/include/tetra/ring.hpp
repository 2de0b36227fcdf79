#pragma once

#include <map>
#include <string>

#include "tetra/polynomial.hpp"
#include "tetra/rational.hpp"

namespace tetra {

// Element of A = K[T, T^-1, (T-1)^-1] on its canonical basis
//   {1} u {T^i, U^i, V^i : i >= 1},
// where U = T' = 1 - T^-1 and V = T'' = (1-T)^-1. The three symbols form
// the order-3 orbit of T under the ring automorphism T -> T'. Stored maps
// hold exponents >= 1 and never hold zero coefficients, so equality of
// representations is equality of elements.
struct RingElem {
    Rational c = 0;                   // coefficient of 1
    std::map<unsigned, Rational> t;   // coefficients of T^i
    std::map<unsigned, Rational> u;   // coefficients of U^i = (T')^i
    std::map<unsigned, Rational> v;   // coefficients of V^i = (T'')^i

    bool is_zero() const { return rat_is_zero(c) && t.empty() && u.empty() && v.empty(); }
    // True when the element lies in K[T] (constant + T-powers only).
    bool is_t_polynomial() const { return u.empty() && v.empty(); }

    friend bool operator==(const RingElem& a, const RingElem& b) = default;
};

RingElem ring_zero();
RingElem ring_const(const Rational& q);
RingElem ring_t(unsigned i, const Rational& coeff = 1);
RingElem ring_u(unsigned i, const Rational& coeff = 1);
RingElem ring_v(unsigned i, const Rational& coeff = 1);

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_scale(const Rational& s, const RingElem& a);
RingElem ring_mul(const RingElem& a, const RingElem& b);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return ring_add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return ring_sub(a, b); }
inline RingElem operator-(const RingElem& a) { return ring_neg(a); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return ring_mul(a, b); }
inline RingElem operator*(const Rational& s, const RingElem& a) { return ring_scale(s, a); }

// num(T) / (T^a (T-1)^b) with a, b >= 0; the transient fraction form used
// by multiplication and decomposition.
struct RingFrac {
    Polynomial num;
    unsigned a = 0;
    unsigned b = 0;
};

// Rewrites a RingElem as a single fraction over T^a (T-1)^b.
RingFrac ring_to_frac(const RingElem& x);

// Unique expansion of num(T)/(T^a (T-1)^b) on the canonical basis, by
// partial fractions: polynomial part + principal part at T=0 (rewritten in
// powers of U via T^-1 = 1-U) + principal part at T=1 (rewritten in powers
// of V via (T-1)^-1 = -V). Rejects negative a or b.
RingElem canonical_decompose(const Polynomial& num, int a, int b);

// K[T] -> canonical form (constant + T-part).
RingElem ring_from_poly(const Polynomial& p);
// Inverse of ring_from_poly; requires is_t_polynomial().
Polynomial ring_to_poly(const RingElem& x);

// The order-3 ring automorphism T -> U -> V -> T, applied on the basis as a
// cyclic shift of the three exponent maps.
RingElem ring_prime(const RingElem& a);

// Exact evaluation at T = t (t outside {0,1}), with U = 1 - 1/t and
// V = 1/(1-t). Serves as the independent oracle for the ring arithmetic.
Rational eval_at(const RingElem& a, const Rational& t);

// Sum of all stored coefficients of one part (used by membership tests and
// the direct-sum routing).
Rational map_coeff_sum(const std::map<unsigned, Rational>& part);

// Textual form, bit-exact: terms joined by +/-; constant first, then T^i,
// U^i, V^i with ascending exponents; "^1" omitted; e.g. "-1 + T - 2*U^3 + 1/2*V".
std::string ring_str(const RingElem& x);

}  // namespace tetra
