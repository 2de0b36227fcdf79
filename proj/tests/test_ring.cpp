#include <doctest.h>

#include "tetra/ring.hpp"
#include "test_util.hpp"

using namespace tetra;
using tetra::test::Rng;

TEST_CASE("rational normalization and formatting") {
    CHECK(rat_parse("2/4") == rat(1, 2));
    CHECK(rat_str(rat_parse("2/4")) == "1/2");
    CHECK(rat_str(rat(-6, 4)) == "-3/2");
    CHECK(rat_str(rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("polynomial division and series inverse") {
    Rng rng(12);
    for (int it = 0; it < 30; ++it) {
        Polynomial a = test::random_poly(rng, 6);
        Polynomial b = test::random_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = Polynomial::divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
    Polynomial p({rat(2), rat(-3), rat(1)});
    Polynomial inv = Polynomial::series_inverse(p, 8);
    Polynomial prod = p * inv;
    for (std::size_t k = 0; k < 8; ++k) CHECK(prod.coeff(k) == (k == 0 ? rat(1) : rat(0)));
}

TEST_CASE("ring addition keeps independent basis atoms") {
    CHECK((ring_const(1) + ring_const(-1)).is_zero());
    RingElem s = ring_t(1) + ring_u(1);
    CHECK(s.t.size() == 1);
    CHECK(s.u.size() == 1);
    RingElem collected = (ring_t(1) + ring_const(1)) + ring_t(1, 2);
    CHECK(collected == ring_t(1, 3) + ring_const(1));
}

TEST_CASE("defining products of the three symbols") {
    RingElem T = ring_t(1), U = ring_u(1), V = ring_v(1);
    CHECK(T * U == ring_t(1) + ring_const(-1));  // T-1
    CHECK(U * V == ring_u(1) + ring_const(-1));  // U-1
    CHECK(V * T == ring_v(1) + ring_const(-1));  // V-1
    RingElem tinv = ring_const(1) - U;
    CHECK(T * tinv == ring_const(1));
}

TEST_CASE("canonical decomposition worked examples") {
    // T^-1 = 1 - U
    CHECK(canonical_decompose(Polynomial(Rational(1)), 1, 0) == ring_const(1) - ring_u(1));
    // (T-1)^-1 = -V
    CHECK(canonical_decompose(Polynomial(Rational(1)), 0, 1) == ring_v(1, -1));
    // plain polynomial passes through
    Polynomial sq({rat(1), rat(-2), rat(1)});
    RingElem r = canonical_decompose(sq, 0, 0);
    CHECK(r == ring_const(1) + ring_t(1, -2) + ring_t(2, 1));
    // T^-2 = (1-U)^2 = 1 - 2U + U^2
    CHECK(canonical_decompose(Polynomial(Rational(1)), 2, 0) ==
          ring_const(1) + ring_u(1, -2) + ring_u(2, 1));
    CHECK_THROWS_AS(canonical_decompose(Polynomial(Rational(1)), -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(canonical_decompose(Polynomial(Rational(1)), 0, -2), std::invalid_argument);
}

TEST_CASE("canonical decomposition against the evaluation oracle") {
    Rng rng(77);
    for (int it = 0; it < 40; ++it) {
        Polynomial num = test::random_poly(rng, 5);
        std::uniform_int_distribution<int> small(0, 3);
        int a = small(rng), b = small(rng);
        RingElem dec = canonical_decompose(num, a, b);
        for (int k = 0; k < 5; ++k) {
            Rational t = test::random_point(rng);
            Rational expect = num.eval(t) / (rat_pow(t, static_cast<unsigned long>(a)) *
                                             rat_pow(t - 1, static_cast<unsigned long>(b)));
            CHECK(eval_at(dec, t) == expect);
        }
    }
}

TEST_CASE("fraction form round trip") {
    Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        RingElem x = test::random_ring_elem(rng);
        RingFrac f = ring_to_frac(x);
        CHECK(canonical_decompose(f.num, static_cast<int>(f.a), static_cast<int>(f.b)) == x);
    }
}

TEST_CASE("decomposition is additive") {
    Rng rng(6);
    for (int it = 0; it < 30; ++it) {
        Polynomial n1 = test::random_poly(rng, 4);
        Polynomial n2 = test::random_poly(rng, 4);
        std::uniform_int_distribution<int> small(0, 3);
        int a = small(rng), b = small(rng);
        CHECK(canonical_decompose(n1 + n2, a, b) ==
              canonical_decompose(n1, a, b) + canonical_decompose(n2, a, b));
    }
}

TEST_CASE("multiplication is commutative, associative, distributive") {
    Rng rng(42);
    for (int it = 0; it < 25; ++it) {
        RingElem a = test::random_ring_elem(rng);
        RingElem b = test::random_ring_elem(rng);
        RingElem c = test::random_ring_elem(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
        RingElem a = test::random_ring_elem(rng);
        RingElem b = test::random_ring_elem(rng);
        for (int k = 0; k < 5; ++k) {
            Rational t = test::random_point(rng);
            CHECK(eval_at(a + b, t) == eval_at(a, t) + eval_at(b, t));
            CHECK(eval_at(a * b, t) == eval_at(a, t) * eval_at(b, t));
        }
    }
}

TEST_CASE("prime shift is an order-3 ring automorphism") {
    CHECK(ring_prime(ring_t(1)) == ring_u(1));
    CHECK(ring_prime(ring_v(1)) == ring_t(1));
    Rng rng(44);
    for (int it = 0; it < 25; ++it) {
        RingElem a = test::random_ring_elem(rng);
        RingElem b = test::random_ring_elem(rng);
        CHECK(ring_prime(a * b) == ring_prime(a) * ring_prime(b));
        CHECK(ring_prime(a + b) == ring_prime(a) + ring_prime(b));
        CHECK(ring_prime(ring_prime(ring_prime(a))) == a);
    }
}

TEST_CASE("evaluation basics and poles") {
    CHECK(eval_at(ring_t(1), rat(2)) == rat(2));
    CHECK(eval_at(ring_u(1), rat(2)) == rat(1, 2));
    CHECK(eval_at(ring_t(1) * ring_u(1), rat(2)) == rat(1));
    CHECK(eval_at(ring_v(1), rat(3)) == rat(-1, 2));
    CHECK_THROWS_AS(eval_at(ring_t(1), rat(0)), std::domain_error);
    CHECK_THROWS_AS(eval_at(ring_t(1), rat(1)), std::domain_error);
}

TEST_CASE("textual form") {
    RingElem x = ring_const(-1) + ring_t(1) + ring_u(3, -2) + ring_v(1, rat(1, 2));
    CHECK(ring_str(x) == "-1 + T - 2*U^3 + 1/2*V");
    CHECK(ring_str(ring_zero()) == "0");
    CHECK(ring_str(ring_t(2, rat(-3, 4))) == "-3/4*T^2");
}
