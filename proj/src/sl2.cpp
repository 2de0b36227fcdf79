#include "tetra/sl2.hpp"

#include <sstream>

namespace tetra {

Sl2Elem sl2_x() { return {1, 0, 0}; }
Sl2Elem sl2_y() { return {0, 1, 0}; }
Sl2Elem sl2_z() { return {0, 0, 1}; }

Sl2Elem sl2_add(const Sl2Elem& a, const Sl2Elem& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

Sl2Elem sl2_scale(const Rational& s, const Sl2Elem& a) { return {s * a.x, s * a.y, s * a.z}; }

Sl2Elem sl2_bracket(const Sl2Elem& a, const Sl2Elem& b) {
    Rational p = a.x * b.y - a.y * b.x;  // weight of [X,Y]
    Rational q = a.y * b.z - a.z * b.y;  // weight of [Y,Z]
    Rational r = a.z * b.x - a.x * b.z;  // weight of [Z,X]
    return {2 * (p + r), 2 * (p + q), 2 * (q + r)};
}

Sl2Elem efh_to_equitable(const Rational& ce, const Rational& cf, const Rational& ch) {
    // e = (X+Z)/2, f = -(Y+Z)/2, h = Z
    Rational half = rat(1, 2);
    return {half * ce, -half * cf, half * ce - half * cf + ch};
}

Sl2Elem sl2_prime(const Sl2Elem& a) { return {a.z, a.x, a.y}; }

Sl2Elem sl2_omega(const Sl2Elem& a) { return {-a.y, -a.x, -a.z}; }

std::string sl2_str(const Sl2Elem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const char* sym) {
        if (rat_is_zero(c)) return;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1) os << rat_str(mag);
        os << sym;
    };
    emit(a.x, "X");
    emit(a.y, "Y");
    emit(a.z, "Z");
    return os.str();
}

}  // namespace tetra
