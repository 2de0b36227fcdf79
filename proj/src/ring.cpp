#include "tetra/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace tetra {

namespace {

void add_term(std::map<unsigned, Rational>& part, unsigned i, const Rational& coeff) {
    auto it = part.find(i);
    if (it == part.end()) {
        if (!rat_is_zero(coeff)) part.emplace(i, coeff);
        return;
    }
    it->second += coeff;
    if (rat_is_zero(it->second)) part.erase(it);
}

void add_into(std::map<unsigned, Rational>& dst, const std::map<unsigned, Rational>& src) {
    for (const auto& [i, q] : src) add_term(dst, i, q);
}

// (x - 1)^b
Polynomial xm1_pow(unsigned b) {
    Polynomial r(Rational(1));
    Polynomial xm1({Rational(-1), Rational(1)});
    for (unsigned k = 0; k < b; ++k) r = r * xm1;
    return r;
}

Polynomial x_pow(unsigned a) { return Polynomial::monomial(1, a); }

// Truncated product mod x^n.
Polynomial mul_mod(const Polynomial& p, const Polynomial& q, std::size_t n) {
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n && i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; i + j < n && j < q.coeffs().size(); ++j)
            out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return Polynomial(std::move(out));
}

}  // namespace

RingElem ring_zero() { return {}; }

RingElem ring_const(const Rational& q) {
    RingElem r;
    r.c = q;
    return r;
}

RingElem ring_t(unsigned i, const Rational& coeff) {
    if (i == 0) return ring_const(coeff);
    RingElem r;
    add_term(r.t, i, coeff);
    return r;
}

RingElem ring_u(unsigned i, const Rational& coeff) {
    if (i == 0) return ring_const(coeff);
    RingElem r;
    add_term(r.u, i, coeff);
    return r;
}

RingElem ring_v(unsigned i, const Rational& coeff) {
    if (i == 0) return ring_const(coeff);
    RingElem r;
    add_term(r.v, i, coeff);
    return r;
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    r.c += b.c;
    add_into(r.t, b.t);
    add_into(r.u, b.u);
    add_into(r.v, b.v);
    return r;
}

RingElem ring_neg(const RingElem& a) { return ring_scale(-1, a); }

RingElem ring_sub(const RingElem& a, const RingElem& b) { return ring_add(a, ring_neg(b)); }

RingElem ring_scale(const Rational& s, const RingElem& a) {
    if (rat_is_zero(s)) return {};
    RingElem r;
    r.c = s * a.c;
    for (const auto& [i, q] : a.t) r.t.emplace(i, s * q);
    for (const auto& [i, q] : a.u) r.u.emplace(i, s * q);
    for (const auto& [i, q] : a.v) r.v.emplace(i, s * q);
    return r;
}

RingFrac ring_to_frac(const RingElem& x) {
    // Common denominator T^a (T-1)^b with a = top U-exponent, b = top V-exponent.
    unsigned a = x.u.empty() ? 0 : x.u.rbegin()->first;
    unsigned b = x.v.empty() ? 0 : x.v.rbegin()->first;
    Polynomial num = Polynomial(x.c) * x_pow(a) * xm1_pow(b);
    for (const auto& [i, q] : x.t)
        num += Polynomial(q) * x_pow(a + i) * xm1_pow(b);
    // U^i = (T-1)^i / T^i
    for (const auto& [i, q] : x.u)
        num += Polynomial(q) * x_pow(a - i) * xm1_pow(b + i);
    // V^i = (-1)^i / (T-1)^i
    for (const auto& [i, q] : x.v) {
        Rational s = (i % 2 == 0) ? q : Rational(-q);
        num += Polynomial(s) * x_pow(a) * xm1_pow(b - i);
    }
    return {num, a, b};
}

RingElem canonical_decompose(const Polynomial& num, int a_in, int b_in) {
    if (a_in < 0 || b_in < 0)
        throw std::invalid_argument("canonical_decompose: negative pole order");
    const auto a = static_cast<unsigned>(a_in);
    const auto b = static_cast<unsigned>(b_in);

    Polynomial den = x_pow(a) * xm1_pow(b);
    auto [quot, rem] = Polynomial::divmod(num, den);

    RingElem out = ring_from_poly(quot);
    if (rem.is_zero()) return out;

    // rem/den is a proper fraction; it equals the sum of its principal parts
    // at T=0 and T=1. Coefficient of T^-i is the series coefficient of
    // T^(a-i) in rem(T)/(T-1)^b around 0, and symmetrically at 1.
    if (a > 0) {
        Polynomial inv = Polynomial::series_inverse(xm1_pow(b), a);
        Polynomial ser = mul_mod(rem, inv, a);
        for (unsigned i = 1; i <= a; ++i) {
            const Rational& alpha = ser.coeff(a - i);
            if (rat_is_zero(alpha)) continue;
            // T^-i = (1-U)^i, expanded binomially.
            Rational binom = 1;
            for (unsigned k = 0; k <= i; ++k) {
                Rational term = alpha * binom;
                if (k % 2 == 1) term = -term;
                if (k == 0)
                    out.c += term;
                else
                    add_term(out.u, k, term);
                binom *= rat(static_cast<long>(i - k), static_cast<long>(k + 1));
            }
        }
    }
    if (b > 0) {
        Polynomial shifted = rem.compose(Polynomial({Rational(1), Rational(1)}));  // rem(S+1)
        Polynomial den0 = x_pow(a).compose(Polynomial({Rational(1), Rational(1)}));  // (S+1)^a
        Polynomial inv = Polynomial::series_inverse(den0, b);
        Polynomial ser = mul_mod(shifted, inv, b);
        for (unsigned j = 1; j <= b; ++j) {
            const Rational& beta = ser.coeff(b - j);
            if (rat_is_zero(beta)) continue;
            // (T-1)^-j = (-1)^j V^j
            Rational term = (j % 2 == 0) ? beta : Rational(-beta);
            add_term(out.v, j, term);
        }
    }
    return out;
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RingFrac fa = ring_to_frac(a);
    RingFrac fb = ring_to_frac(b);
    return canonical_decompose(fa.num * fb.num, static_cast<int>(fa.a + fb.a),
                               static_cast<int>(fa.b + fb.b));
}

RingElem ring_from_poly(const Polynomial& p) {
    RingElem r;
    r.c = p.coeff(0);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        if (!rat_is_zero(p.coeffs()[k])) r.t.emplace(static_cast<unsigned>(k), p.coeffs()[k]);
    return r;
}

Polynomial ring_to_poly(const RingElem& x) {
    if (!x.is_t_polynomial())
        throw std::invalid_argument("ring_to_poly: element is not in K[T]");
    std::size_t n = x.t.empty() ? 0 : x.t.rbegin()->first;
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = x.c;
    for (const auto& [i, q] : x.t) c[i] = q;
    return Polynomial(std::move(c));
}

RingElem ring_prime(const RingElem& a) {
    RingElem r;
    r.c = a.c;
    r.u = a.t;
    r.v = a.u;
    r.t = a.v;
    return r;
}

Rational eval_at(const RingElem& a, const Rational& t) {
    if (t == 0 || t == 1)
        throw std::domain_error("eval_at: pole at T=0 or T=1");
    Rational tu = 1 - 1 / t;
    Rational tv = 1 / (1 - t);
    Rational acc = a.c;
    for (const auto& [i, q] : a.t) acc += q * rat_pow(t, i);
    for (const auto& [i, q] : a.u) acc += q * rat_pow(tu, i);
    for (const auto& [i, q] : a.v) acc += q * rat_pow(tv, i);
    return acc;
}

Rational map_coeff_sum(const std::map<unsigned, Rational>& part) {
    Rational s = 0;
    for (const auto& [i, q] : part) s += q;
    return s;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coeff, const std::string& atom) {
    Rational mag = abs(coeff);
    if (first) {
        if (sgn(coeff) < 0) os << "-";
        first = false;
    } else {
        os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    if (atom.empty()) {
        os << rat_str(mag);
    } else {
        if (mag != 1) os << rat_str(mag) << "*";
        os << atom;
    }
}

void append_part(std::ostringstream& os, bool& first, const std::map<unsigned, Rational>& part,
                 const char* sym) {
    for (const auto& [i, q] : part) {
        std::string atom = sym;
        if (i > 1) atom += "^" + std::to_string(i);
        append_term(os, first, q, atom);
    }
}

}  // namespace

std::string ring_str(const RingElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (!rat_is_zero(x.c)) append_term(os, first, x.c, "");
    append_part(os, first, x.t, "T");
    append_part(os, first, x.u, "U");
    append_part(os, first, x.v, "V");
    return os.str();
}

}  // namespace tetra
