#pragma once

#include <array>
#include <map>

#include "tetra/loop.hpp"
#include "tetra/onsager.hpp"
#include "tetra/permutation.hpp"
#include "tetra/report.hpp"
#include "tetra/sl2.hpp"

namespace tetra {

// Generator X_ij of the tetrahedron algebra, i != j in {0,1,2,3}. X_ji is
// represented as -X_ij at normalization time.
struct GeneratorId {
    int i;
    int j;
};
GeneratorId make_generator(int i, int j);  // validates the index pair

// Element of the tetrahedron algebra, stored as its normal form inside the
// three-point loop algebra (the defining isomorphism is faithful, so
// equality of normal forms is equality in the algebra).
struct TetraElem {
    LoopElem nf;

    bool is_zero() const { return nf.is_zero(); }
    friend bool operator==(const TetraElem& a, const TetraElem& b) = default;
};

inline TetraElem operator+(const TetraElem& a, const TetraElem& b) { return {a.nf + b.nf}; }
inline TetraElem operator-(const TetraElem& a) { return {-a.nf}; }
inline TetraElem operator-(const TetraElem& a, const TetraElem& b) { return {a.nf - b.nf}; }
inline TetraElem operator*(const Rational& s, const TetraElem& a) { return {s * a.nf}; }

// The six defining images: X12 -> X(x)1, X23 -> Y(x)1, X31 -> Z(x)1,
// X03 -> Y(x)T + Z(x)(T-1), X01 -> Z(x)U + X(x)(U-1),
// X02 -> X(x)V + Y(x)(V-1); reversed pairs are negated.
TetraElem generator_image(GeneratorId g);

TetraElem tetra_bracket(const TetraElem& a, const TetraElem& b);

// X_ij -> X_{i^tau, j^tau} on a single generator.
TetraElem s4_act_generator(GeneratorId g, const Permutation& tau);

// Linear extension of X -> X_hi, Y -> X_ij, Z -> X_jh; indices must be
// mutually distinct.
TetraElem std_hom_sl2(const Sl2Elem& u, const std::array<int, 3>& triple);

inline constexpr std::array<int, 4> kStdOnsagerQuad = {1, 2, 0, 3};
inline constexpr std::array<int, 4> kStdLoopQuad = {1, 2, 3, 0};

// The embedding of the Onsager algebra determined by A -> X_hi, B -> X_jk.
// For the standard quad the basis images come from the Chebyshev closed
// forms; any other quad uses the bracket recursion from its own seeds
// (the same homomorphism, by uniqueness on the generators A, B).
TetraElem onsager_image(const OnsagerElem& u, const std::array<int, 4>& quad = kStdOnsagerQuad);

// The embedding of the Laurent loop algebra determined by X1 -> X_hi, ...,
// Z0 -> X_hj. For the standard quad this is the identity on normal forms;
// other quads apply the transported S4 automorphism. Rejects elements with
// coefficients outside K[T, T^-1].
TetraElem loop_image(const LoopElem& u, const std::array<int, 4>& quad = kStdLoopQuad);

// Closed-form normal forms of the Onsager basis under the standard
// embedding (sector 0) and of its two prime-rotated siblings (sectors 1, 2):
//   sector 0: a_m, g_l over Chebyshev data in T
//   sector 1: a'_m, g'_l over Chebyshev data in U
//   sector 2: a''_m, g''_l over Chebyshev data in V
LoopElem sigma_a(long m, int sector = 0);
LoopElem sigma_g(long l, int sector = 0);  // l >= 1

// Independent route to the same elements: seeds a0, a1 and the bracket
// recursion g1 = [a1,a0]/2, [g1,a_m] = a_{m+1} - a_{m-1}, g_l = [a_l,a0]/2.
class OnsagerRecursion {
  public:
    OnsagerRecursion(LoopElem a0, LoopElem a1);
    const LoopElem& a(long m);
    const LoopElem& g(long l);

  private:
    std::map<long, LoopElem> a_;
    std::map<long, LoopElem> g_;
    LoopElem g1_;
    long lo_ = 0, hi_ = 1;
};

// Transported S4 automorphism of the loop algebra: a semilinear map given
// by the images of X(x)1, Y(x)1, Z(x)1 (columns over A) and a ring
// substitution (images of T, U, V). Built for all 24 permutations by
// composing the three seed maps.
struct SigmaAut {
    std::array<LoopElem, 3> col;
    std::array<RingElem, 3> theta;

    RingElem subst(const RingElem& r) const;
    LoopElem apply(const LoopElem& v) const;
};
const SigmaAut& sigma_action(const Permutation& tau);

// Coordinates of an element on the three Onsager summands.
struct OmegaCoords {
    OnsagerElem omega;
    OnsagerElem omega_p;
    OnsagerElem omega_pp;

    friend bool operator==(const OmegaCoords& a, const OmegaCoords& b) = default;
};

OmegaCoords omega_decompose(const TetraElem& u);
TetraElem omega_reconstruct(const OmegaCoords& c);

// Defining relations on the normal forms: antisymmetric generators (12
// ordered pairs), triangle brackets (24 ordered triples), degree-3
// relations on opposite edges (24 ordered quadruples).
Report verify_tetra_relations();

// The six expansion identities for [a0', a_m], [a0', a_{1-m}], [a0', g_m],
// [a1', a_m], [a1', a_{1-m}], [a1', g_m], checked for 1 <= m <= max_m.
Report verify_bracket_recursions(int max_m);

// The 24 induced automorphisms act distinctly on the six generators and
// respect brackets.
Report verify_s4_injection();

}  // namespace tetra
