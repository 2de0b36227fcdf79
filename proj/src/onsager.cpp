#include "tetra/onsager.hpp"

#include <sstream>

namespace tetra {

namespace {

void add_a(OnsagerElem& x, long m, const Rational& coeff) {
    if (rat_is_zero(coeff)) return;
    auto it = x.a.find(m);
    if (it == x.a.end()) {
        x.a.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (rat_is_zero(it->second)) x.a.erase(it);
    }
}

void add_g(OnsagerElem& x, long l, Rational coeff) {
    if (l == 0 || rat_is_zero(coeff)) return;
    if (l < 0) {
        l = -l;
        coeff = -coeff;
    }
    auto it = x.g.find(l);
    if (it == x.g.end()) {
        x.g.emplace(l, coeff);
    } else {
        it->second += coeff;
        if (rat_is_zero(it->second)) x.g.erase(it);
    }
}

}  // namespace

OnsagerElem onsager_zero() { return {}; }

OnsagerElem onsager_a(long m, const Rational& coeff) {
    OnsagerElem x;
    add_a(x, m, coeff);
    return x;
}

OnsagerElem onsager_g(long l, const Rational& coeff) {
    OnsagerElem x;
    add_g(x, l, coeff);
    return x;
}

OnsagerElem onsager_add(const OnsagerElem& x, const OnsagerElem& y) {
    OnsagerElem r = x;
    for (const auto& [m, q] : y.a) add_a(r, m, q);
    for (const auto& [l, q] : y.g) add_g(r, l, q);
    return r;
}

OnsagerElem onsager_scale(const Rational& s, const OnsagerElem& x) {
    OnsagerElem r;
    if (rat_is_zero(s)) return r;
    for (const auto& [m, q] : x.a) r.a.emplace(m, s * q);
    for (const auto& [l, q] : x.g) r.g.emplace(l, s * q);
    return r;
}

OnsagerElem onsager_bracket(const OnsagerElem& x, const OnsagerElem& y) {
    OnsagerElem r;
    // [A_l, A_m] = 2 G_{l-m}; the sign convention on G makes this valid for
    // every ordered pair.
    for (const auto& [l, p] : x.a)
        for (const auto& [m, q] : y.a) add_g(r, l - m, 2 * p * q);
    // [G_l, A_m] = A_{m+l} - A_{m-l}
    for (const auto& [l, p] : x.g)
        for (const auto& [m, q] : y.a) {
            add_a(r, m + l, p * q);
            add_a(r, m - l, -(p * q));
        }
    // [A_m, G_l] = -(A_{m+l} - A_{m-l})
    for (const auto& [m, p] : x.a)
        for (const auto& [l, q] : y.g) {
            add_a(r, m + l, -(p * q));
            add_a(r, m - l, p * q);
        }
    return r;
}

OnsagerElem onsager_auto(const OnsagerElem& x, OnsAuto which) {
    OnsagerElem r;
    for (const auto& [m, q] : x.a) {
        switch (which) {
            case OnsAuto::down: add_a(r, m, (m % 2 == 0) ? Rational(-q) : q); break;
            case OnsAuto::Down: add_a(r, m, (m % 2 == 0) ? q : Rational(-q)); break;
            case OnsAuto::star: add_a(r, 1 - m, q); break;
        }
    }
    for (const auto& [l, q] : x.g) {
        switch (which) {
            case OnsAuto::down:
            case OnsAuto::Down: add_g(r, l, (l % 2 == 0) ? q : Rational(-q)); break;
            case OnsAuto::star: add_g(r, l, -q); break;
        }
    }
    return r;
}

bool check_dolan_grady(const OnsagerElem& x, const OnsagerElem& y) {
    OnsagerElem xy = onsager_bracket(x, y);
    OnsagerElem lhs1 = onsager_bracket(x, onsager_bracket(x, xy));
    if (!(lhs1 == onsager_scale(4, xy))) return false;
    OnsagerElem yx = onsager_bracket(y, x);
    OnsagerElem lhs2 = onsager_bracket(y, onsager_bracket(y, yx));
    return lhs2 == onsager_scale(4, yx);
}

namespace {

std::string index_str(long i) {
    if (i < 0) return "{" + std::to_string(i) + "}";
    return std::to_string(i);
}

}  // namespace

std::string onsager_str(const OnsagerElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](char sym, long idx, const Rational& coeff) {
        Rational mag = abs(coeff);
        if (first) {
            if (sgn(coeff) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
        }
        if (mag != 1) os << rat_str(mag) << "*";
        os << sym << "_" << index_str(idx);
    };
    for (const auto& [m, q] : x.a) emit('A', m, q);
    for (const auto& [l, q] : x.g) emit('G', l, q);
    return os.str();
}

}  // namespace tetra
