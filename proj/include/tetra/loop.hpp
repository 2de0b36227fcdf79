#pragma once

#include <string>

#include "tetra/report.hpp"
#include "tetra/ring.hpp"
#include "tetra/sl2.hpp"

namespace tetra {

// Element of the three-point loop algebra sl2 (x) A, stored as the unique
// coefficient triple so the element is X(x)cx + Y(x)cy + Z(x)cz.
struct LoopElem {
    RingElem cx;
    RingElem cy;
    RingElem cz;

    bool is_zero() const { return cx.is_zero() && cy.is_zero() && cz.is_zero(); }
    friend bool operator==(const LoopElem& a, const LoopElem& b) = default;
};

LoopElem loop_zero();
LoopElem loop_x(const RingElem& a);
LoopElem loop_y(const RingElem& a);
LoopElem loop_z(const RingElem& a);
// u (x) a for u in sl2.
LoopElem loop_tensor(const Sl2Elem& u, const RingElem& a);

LoopElem loop_add(const LoopElem& a, const LoopElem& b);
LoopElem loop_scale(const Rational& s, const LoopElem& a);
inline LoopElem operator+(const LoopElem& a, const LoopElem& b) { return loop_add(a, b); }
inline LoopElem operator-(const LoopElem& a) { return loop_scale(-1, a); }
inline LoopElem operator-(const LoopElem& a, const LoopElem& b) { return a + (-b); }
inline LoopElem operator*(const Rational& s, const LoopElem& a) { return loop_scale(s, a); }

// [u (x) a, v (x) b] = [u,v] (x) ab, extended bilinearly.
LoopElem loop_bracket(const LoopElem& a, const LoopElem& b);

// (u (x) a)' = u' (x) a'; order 3.
LoopElem loop_prime(const LoopElem& a);

// Exact evaluation at T = t, giving an sl2 element; oracle for loop arithmetic.
Sl2Elem loop_eval(const LoopElem& a, const Rational& t);

// True when every coefficient lies in K[T, T^-1]; on the canonical basis
// this is exactly "no V-part" (negative powers of T span 1 and the U-powers).
bool loop_in_laurent_subalgebra(const LoopElem& a);

// The six Chevalley generators of L(sl2) inside L(sl2)+, on the equitable
// coordinates: e1 = e(x)1, f1 = f(x)1, h1 = h(x)1, e0 = f(x)T,
// f0 = e(x)T^-1, h0 = -h(x)1.
enum class Chevalley { e0, e1, f0, f1, h0, h1 };
LoopElem chevalley_generator(Chevalley name);

// Equitable loop generators X_i, Y_i, Z_i (i in {0,1}) via X_i = 2e_i - h_i,
// Y_i = -2f_i - h_i, Z_i = h_i.
enum class EquitableLoopGen { X0, Y0, Z0, X1, Y1, Z1 };
LoopElem equitable_loop_generator(EquitableLoopGen name);

// Verifies the Kac-Moody presentation (h0+h1=0, [h_i,e_j]=A_ij e_j, ...,
// Serre relations, Cartan matrix [[2,-2],[-2,2]]) and the equitable
// presentation (Z0+Z1=0, cyclic brackets, cross relations, the degree-3
// relations on X and on Y) on the concrete generators. The relation family
// is finite; maxdeg is accepted for interface uniformity and unused.
Report check_loop_presentation(int maxdeg = 0);

// The three-way direct sum: Delta has cx in K[T], cy in T*K[T],
// cz in (T-1)*K[T]; Delta' and Delta'' are its images under prime.
struct DeltaSplit {
    LoopElem d;    // component in Delta
    LoopElem dp;   // component in Delta'
    LoopElem dpp;  // component in Delta''
};

enum class DeltaKind { Delta, DeltaPrime, DeltaPrimePrime };

DeltaSplit split_delta(const LoopElem& a);
bool delta_membership(const LoopElem& a, DeltaKind which);

// Textual form: X[<ring>]; Y[<ring>]; Z[<ring>] with empty brackets for zero.
std::string loop_str(const LoopElem& a);
// JSON object {"X": {...}, "Y": {...}, "Z": {...}} with rationals as strings.
std::string loop_json(const LoopElem& a);

}  // namespace tetra
