#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tetra {

// Exact scalar field: the rationals, arbitrary precision. No floating
// point appears anywhere in the library.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" (q > 0 after normalization); result is in lowest terms.
inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise; always lowest terms, denominator >= 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

}  // namespace tetra
