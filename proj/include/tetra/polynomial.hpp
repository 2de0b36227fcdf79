#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

// Univariate polynomial over the rationals, dense coefficients, trailing
// zeros trimmed. The zero polynomial has no coefficients and no degree.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& coeff, std::size_t deg);
    static Polynomial variable();  // x

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    // Coefficient of x^k (zero beyond the stored range).
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Rational eval(const Rational& x) const;
    Polynomial compose(const Polynomial& inner) const;

    // Quotient and remainder, deg(rem) < deg(divisor). Throws on zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    // Power-series inverse mod x^n; requires nonzero constant term.
    static Polynomial series_inverse(const Polynomial& p, std::size_t n);

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace tetra
