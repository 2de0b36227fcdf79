#include <doctest.h>

#include <random>

#include "tetra/expr.hpp"
#include "test_util.hpp"

using namespace tetra;
using tetra::test::Rng;

using tetra::test::random_ast;

TEST_CASE("parsing the documented shapes") {
    ExprPtr b = parse("[X12, X03]");
    REQUIRE(std::holds_alternative<BracketNode>(b->node));
    const auto& br = std::get<BracketNode>(b->node);
    CHECK(std::holds_alternative<GenNode>(br.lhs->node));
    CHECK(std::get<GenNode>(br.lhs->node).g.i == 1);
    CHECK(std::get<GenNode>(br.rhs->node).g.j == 3);

    ExprPtr a = parse("prime(X01)");
    REQUIRE(std::holds_alternative<AutoNode>(a->node));
    CHECK(evaluate(a) == generator_image({0, 2}));

    ExprPtr s = parse("2*X12 - 1/2*[X23, X30]");
    REQUIRE(std::holds_alternative<SumNode>(s->node));
    const auto& sum = std::get<SumNode>(s->node);
    REQUIRE(sum.terms.size() == 2);
    CHECK(sum.terms[0].first == rat(2));
    CHECK(sum.terms[1].first == rat(-1, 2));
    CHECK(std::holds_alternative<BracketNode>(sum.terms[1].second->node));
}

TEST_CASE("documented error cases carry positions") {
    CHECK_THROWS_WITH_AS(parse("X11"), "generator digits must differ at position 0",
                         ParseError);
    try {
        parse("[X12, X03");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 9);
    }
    try {
        parse("perm(0112)(X03)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("evaluation matches the generator arithmetic") {
    TetraElem lhs = evaluate(parse("[X23, X30]"));
    TetraElem expect =
        Rational(2) * generator_image({2, 3}) + Rational(2) * generator_image({3, 0});
    CHECK(lhs == expect);
    CHECK(evaluate(parse("X12 + X21")).is_zero());
    CHECK(evaluate(parse("perm(0132)(X03)")) == generator_image({0, 2}));
}

TEST_CASE("printing is deterministic and normalizing") {
    CHECK(print(parse("[X12,X03]")) == "[X12, X03]");
    CHECK(print(parse("2/4*X12")) == "1/2*X12");
    CHECK(print(parse("X01 - X10 + 3*[X12, X23]")) == "X01 - X10 + 3*[X12, X23]");
}

TEST_CASE("parse after print is the identity on random trees") {
    Rng rng(61);
    for (int it = 0; it < 300; ++it) {
        ExprPtr ast = random_ast(rng, 6);
        ExprPtr back = parse(print(ast));
        INFO(print(ast));
        CHECK(ast_equal(ast, back));
    }
}

TEST_CASE("evaluation is linear and antisymmetric") {
    Rng rng(62);
    for (int it = 0; it < 30; ++it) {
        ExprPtr a = random_ast(rng, 3);
        ExprPtr b = random_ast(rng, 3);
        auto br = std::make_shared<ExprNode>();
        br->node = BracketNode{a, b};
        auto rb = std::make_shared<ExprNode>();
        rb->node = BracketNode{b, a};
        CHECK(evaluate(br) == -evaluate(rb));

        Rational c1 = test::random_nonzero_rational(rng);
        Rational c2 = test::random_nonzero_rational(rng);
        auto sum = std::make_shared<ExprNode>();
        sum->node = SumNode{{{c1, a}, {c2, b}}};
        CHECK(evaluate(sum) == c1 * evaluate(a) + c2 * evaluate(b));
    }
}

TEST_CASE("arbitrary input either parses or raises a positioned error") {
    Rng rng(65);
    const std::string alphabet = "XperomdwnDst0123456789*/+-[](), ";
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
    for (int it = 0; it < 500; ++it) {
        std::string s;
        std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) s += alphabet[ch(rng)];
        try {
            ExprPtr ast = parse(s);
            CHECK(ast != nullptr);
        } catch (const ParseError& e) {
            CHECK(e.pos <= s.size());
        }
    }
}

TEST_CASE("acting on an expression equals wrapping it in an automorphism node") {
    Rng rng(64);
    const auto& perms = all_permutations();
    std::uniform_int_distribution<std::size_t> pi(0, perms.size() - 1);
    for (int it = 0; it < 25; ++it) {
        ExprPtr e = random_ast(rng, 4);
        Permutation tau = perms[pi(rng)];
        auto wrapped = std::make_shared<ExprNode>();
        wrapped->node = AutoNode{"perm(" + perm_str(tau) + ")", tau, e};
        CHECK(s4_act(e, tau) == evaluate(wrapped));
    }
    CHECK(s4_act(parse("X01"), perm_prime()) == generator_image({0, 2}));
}

TEST_CASE("automorphism nodes compose by the right-action rule") {
    Rng rng(63);
    const auto& perms = all_permutations();
    std::uniform_int_distribution<std::size_t> pi(0, perms.size() - 1);
    for (int it = 0; it < 40; ++it) {
        ExprPtr e = random_ast(rng, 3);
        Permutation tau = perms[pi(rng)];
        Permutation sig = perms[pi(rng)];
        auto inner = std::make_shared<ExprNode>();
        inner->node = AutoNode{"perm(" + perm_str(tau) + ")", tau, e};
        auto outer = std::make_shared<ExprNode>();
        outer->node = AutoNode{"perm(" + perm_str(sig) + ")", sig, inner};
        Permutation combined = perm_compose(tau, sig);  // tau first, then sigma
        auto flat = std::make_shared<ExprNode>();
        flat->node = AutoNode{"perm(" + perm_str(combined) + ")", combined, e};
        CHECK(evaluate(outer) == evaluate(flat));
    }
}
