#include "tetra/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace tetra {

namespace {
const Rational kZero = 0;
}

Polynomial::Polynomial(const Rational& constant) {
    if (!rat_is_zero(constant)) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t deg) {
    Polynomial p;
    if (!rat_is_zero(coeff)) {
        p.coeffs_.assign(deg + 1, kZero);
        p.coeffs_[deg] = coeff;
    }
    return p;
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && rat_is_zero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (rat_is_zero(s)) return Polynomial();
    Polynomial r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + Polynomial(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial rem = num;
    Polynomial quot;
    const std::size_t dd = *den.degree();
    const Rational& lead = den.coeffs_.back();
    while (!rem.is_zero() && *rem.degree() >= dd) {
        std::size_t k = *rem.degree() - dd;
        Rational c = rem.coeffs_.back() / lead;
        quot += monomial(c, k);
        rem -= monomial(c, k) * den;
    }
    return {quot, rem};
}

Polynomial Polynomial::series_inverse(const Polynomial& p, std::size_t n) {
    if (p.is_zero() || rat_is_zero(p.coeff(0)))
        throw std::invalid_argument("series inverse requires nonzero constant term");
    std::vector<Rational> q(n, kZero);
    if (n == 0) return Polynomial();
    Rational inv0 = 1 / p.coeff(0);
    q[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i <= k; ++i) s += p.coeff(i) * q[k - i];
        q[k] = -s * inv0;
    }
    return Polynomial(std::move(q));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (rat_is_zero(c)) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            os << rat_str(mag);
        } else {
            if (!unit) os << rat_str(mag) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace tetra
