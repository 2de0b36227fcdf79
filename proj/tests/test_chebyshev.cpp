#include <doctest.h>

#include "tetra/chebyshev.hpp"
#include "test_util.hpp"

using namespace tetra;
using tetra::test::Rng;

TEST_CASE("small indices") {
    CHECK(chebyshev_u(-1).is_zero());
    CHECK(chebyshev_u(0) == Polynomial(Rational(1)));
    CHECK(chebyshev_u(1) == Polynomial::monomial(2, 1));
    CHECK(chebyshev_u(2) == Polynomial({rat(-1), rat(0), rat(4)}));
    CHECK(chebyshev_u(5) == Polynomial({rat(0), rat(6), rat(0), rat(-32), rat(0), rat(32)}));
    CHECK_THROWS_AS(chebyshev_u(-2), std::invalid_argument);
}

TEST_CASE("three-term recurrence as a polynomial identity") {
    Polynomial twox = Polynomial::monomial(2, 1);
    for (int n = 0; n <= 40; ++n)
        CHECK(twox * chebyshev_u(n) == chebyshev_u(n + 1) + chebyshev_u(n - 1));
}

TEST_CASE("defining identity at parametrized sample points") {
    const Rational svals[3] = {rat(2), rat(3, 2), rat(-5, 3)};
    for (const Rational& s : svals) {
        Rational sinv = 1 / s;
        Rational lam = (s + sinv) / 2;
        for (int n = 0; n <= 12; ++n) {
            Rational num = rat_pow(s, static_cast<unsigned long>(n + 1)) -
                           rat_pow(sinv, static_cast<unsigned long>(n + 1));
            CHECK(chebyshev_u(n).eval(lam) == num / (s - sinv));
        }
    }
}

TEST_CASE("value at 1 collapses to n+1") {
    for (int n = 0; n <= 40; ++n) CHECK(chebyshev_u(n).eval(1) == rat(n + 1));
}

TEST_CASE("shifted polynomials form a graded basis") {
    CHECK(chebyshev_shifted(0) == ring_const(1));
    CHECK(chebyshev_shifted(1) == ring_const(2) + ring_t(1, -4));
    CHECK(chebyshev_shifted(2) == ring_const(3) + ring_t(1, -16) + ring_t(2, 16));
    CHECK(chebyshev_shifted(-1).is_zero());
    for (int n = 0; n <= 40; ++n) {
        Polynomial p = chebyshev_shifted_poly(n);
        REQUIRE(p.degree().has_value());
        CHECK(*p.degree() == static_cast<std::size_t>(n));
        CHECK(!rat_is_zero(p.coeff(static_cast<std::size_t>(n))));
    }
}

TEST_CASE("substitution against the evaluation oracle") {
    Rng rng(101);
    for (int n = 0; n <= 10; ++n) {
        RingElem shifted = chebyshev_shifted(n);
        for (int k = 0; k < 5; ++k) {
            Rational t = test::random_point(rng);
            CHECK(eval_at(shifted, t) == chebyshev_u(n).eval(1 - 2 * t));
        }
    }
}
