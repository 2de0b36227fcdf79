#pragma once

#include <string>

#include "tetra/rational.hpp"

namespace tetra {

// sl2 on the equitable basis X, Y, Z, where all three cyclic brackets have
// the shape [X,Y] = 2X + 2Y. The classical e, f, h exist only through
// conversion (e = (X+Z)/2, f = -(Y+Z)/2, h = Z).
struct Sl2Elem {
    Rational x = 0;
    Rational y = 0;
    Rational z = 0;

    bool is_zero() const { return rat_is_zero(x) && rat_is_zero(y) && rat_is_zero(z); }
    friend bool operator==(const Sl2Elem& a, const Sl2Elem& b) = default;
};

Sl2Elem sl2_x();
Sl2Elem sl2_y();
Sl2Elem sl2_z();

Sl2Elem sl2_add(const Sl2Elem& a, const Sl2Elem& b);
Sl2Elem sl2_scale(const Rational& s, const Sl2Elem& a);
inline Sl2Elem operator+(const Sl2Elem& a, const Sl2Elem& b) { return sl2_add(a, b); }
inline Sl2Elem operator*(const Rational& s, const Sl2Elem& a) { return sl2_scale(s, a); }
inline Sl2Elem operator-(const Sl2Elem& a) { return sl2_scale(-1, a); }
inline Sl2Elem operator-(const Sl2Elem& a, const Sl2Elem& b) { return a + (-b); }

// Bilinear extension of [X,Y] = 2X+2Y, [Y,Z] = 2Y+2Z, [Z,X] = 2Z+2X.
Sl2Elem sl2_bracket(const Sl2Elem& a, const Sl2Elem& b);

// Image of ce*e + cf*f + ch*h on the equitable basis.
Sl2Elem efh_to_equitable(const Rational& ce, const Rational& cf, const Rational& ch);

// The rotation X -> Y -> Z -> X (order 3) and the flip X -> -Y, Y -> -X,
// Z -> -Z (order 2); together they generate an S3 of automorphisms.
Sl2Elem sl2_prime(const Sl2Elem& a);
Sl2Elem sl2_omega(const Sl2Elem& a);

std::string sl2_str(const Sl2Elem& a);

}  // namespace tetra
