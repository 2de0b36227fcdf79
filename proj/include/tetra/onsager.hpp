#pragma once

#include <map>
#include <string>

#include "tetra/rational.hpp"

namespace tetra {

// Element of the Onsager algebra on the basis {A_m : m in Z} u {G_l : l >= 1},
// finitely supported, no stored zeros. Bracket:
//   [A_l, A_m] = 2 G_{l-m}   (all l, m, with G_0 = 0 and G_{-k} = -G_k)
//   [G_l, A_m] = A_{m+l} - A_{m-l}
//   [G_l, G_m] = 0
struct OnsagerElem {
    std::map<long, Rational> a;  // coefficients of A_m
    std::map<long, Rational> g;  // coefficients of G_l, keys >= 1

    bool is_zero() const { return a.empty() && g.empty(); }
    friend bool operator==(const OnsagerElem& x, const OnsagerElem& y) = default;
};

OnsagerElem onsager_zero();
OnsagerElem onsager_a(long m, const Rational& coeff = 1);
// G with any integer index, normalized by G_0 = 0 and G_{-k} = -G_k.
OnsagerElem onsager_g(long l, const Rational& coeff = 1);

OnsagerElem onsager_add(const OnsagerElem& x, const OnsagerElem& y);
OnsagerElem onsager_scale(const Rational& s, const OnsagerElem& x);
inline OnsagerElem operator+(const OnsagerElem& x, const OnsagerElem& y) { return onsager_add(x, y); }
inline OnsagerElem operator-(const OnsagerElem& x) { return onsager_scale(-1, x); }
inline OnsagerElem operator-(const OnsagerElem& x, const OnsagerElem& y) { return x + (-y); }
inline OnsagerElem operator*(const Rational& s, const OnsagerElem& x) { return onsager_scale(s, x); }

OnsagerElem onsager_bracket(const OnsagerElem& x, const OnsagerElem& y);

// The three order-2 automorphisms:
//   down:  A_m -> (-1)^(m-1) A_m, G_l -> (-1)^l G_l
//   Down:  A_m -> (-1)^m A_m,     G_l -> (-1)^l G_l
//   star:  A_m -> A_{1-m},        G_l -> -G_l
enum class OnsAuto { down, Down, star };
OnsagerElem onsager_auto(const OnsagerElem& x, OnsAuto which);

// Both degree-3 relations [a,[a,[a,b]]] = 4[a,b] and [b,[b,[b,a]]] = 4[b,a].
bool check_dolan_grady(const OnsagerElem& x, const OnsagerElem& y);

// Textual form, e.g. "A_0 - 2*G_3 + 1/2*A_{-1}"; A-terms by ascending index,
// then G-terms; braces only around negative indices.
std::string onsager_str(const OnsagerElem& x);

}  // namespace tetra
