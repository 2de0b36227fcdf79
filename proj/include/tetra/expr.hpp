#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tetra/permutation.hpp"
#include "tetra/rational.hpp"
#include "tetra/tetra_algebra.hpp"

namespace tetra {

// AST for the expression language:
//   expr      := [sign] term { ("+"|"-") term }
//   term      := [ rational "*" ] factor
//   factor    := generator | "[" expr "," expr "]" | autoname "(" expr ")" | "(" expr ")"
//   generator := "X" digit digit          (distinct digits from 0123)
//   autoname  := "prime" | "omega" | "d" | "down" | "Down" | "star"
//              | "perm" "(" digit digit digit digit ")"
//   rational  := integer [ "/" positive-integer ]
// The optional leading sign is a convenience extension; everything else is
// the normative grammar.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct GenNode {
    GeneratorId g;
};
struct BracketNode {
    ExprPtr lhs;
    ExprPtr rhs;
};
struct SumNode {
    std::vector<std::pair<Rational, ExprPtr>> terms;  // non-empty, coefficients nonzero-normalized
};
struct AutoNode {
    std::string name;  // "prime", ..., or "perm(abcd)" for printing
    Permutation perm;
    ExprPtr arg;
};

struct ExprNode {
    std::variant<GenNode, BracketNode, SumNode, AutoNode> node;
    std::size_t pos = 0;  // source offset, for diagnostics
};

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

ExprPtr parse(const std::string& input);

// Recursive evaluation: generators through their normal-form images,
// brackets through the loop bracket, automorphism nodes by structural index
// substitution on the generator leaves (innermost automorphism acts first).
TetraElem evaluate(const ExprPtr& ast);

// Applies the vertex permutation to every generator leaf of the expression
// and evaluates the result (the automorphism action on bracket words).
TetraElem s4_act(const ExprPtr& ast, const Permutation& tau);

// Deterministic pretty-printer; parse(print(ast)) is structurally equal to ast.
std::string print(const ExprPtr& ast);

bool ast_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace tetra
