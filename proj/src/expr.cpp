#include "tetra/expr.hpp"

#include <cctype>
#include <sstream>

namespace tetra {

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return src.substr(start, pos - start);
    }

    std::string read_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        return src.substr(start, pos - start);
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos;
        std::string num = read_digits();
        std::string text = num;
        if (consume('/')) text += "/" + read_digits();
        try {
            return rat_parse(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    ExprPtr parse_generator(std::size_t start) {
        // "X" digit digit, already past the X
        auto digit = [&]() -> int {
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                throw ParseError("generator needs two digits after X", pos);
            char c = src[pos++];
            if (c > '3') throw ParseError("generator digit outside 0..3", pos - 1);
            return c - '0';
        };
        int i = digit();
        int j = digit();
        if (i == j) throw ParseError("generator digits must differ", start);
        auto n = std::make_shared<ExprNode>();
        n->node = GenNode{GeneratorId{i, j}};
        n->pos = start;
        return n;
    }

    ExprPtr parse_factor() {
        skip_ws();
        std::size_t start = pos;
        char c = peek();
        if (c == '[') {
            ++pos;
            ExprPtr lhs = parse_expr();
            expect(',', "','");
            ExprPtr rhs = parse_expr();
            expect(']', "']'");
            auto n = std::make_shared<ExprNode>();
            n->node = BracketNode{lhs, rhs};
            n->pos = start;
            return n;
        }
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = read_word();
            if (word == "X") return parse_generator(start);
            if (word.size() >= 2 && word[0] == 'X') {
                // e.g. "Xab" where a/b are not digits; report cleanly
                throw ParseError("generator needs two digits after X", start + 1);
            }
            if (word == "perm") {
                expect('(', "'(' after perm");
                std::size_t dpos = pos;
                std::string digits = read_digits();
                if (digits.size() != 4)
                    throw ParseError("perm needs exactly four digits", dpos);
                Permutation p;
                try {
                    p = perm_parse(digits);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), dpos);
                }
                expect(')', "')'");
                expect('(', "'(' before permuted expression");
                ExprPtr arg = parse_expr();
                expect(')', "')'");
                auto n = std::make_shared<ExprNode>();
                n->node = AutoNode{"perm(" + digits + ")", p, arg};
                n->pos = start;
                return n;
            }
            Permutation p;
            if (word == "prime") p = perm_prime();
            else if (word == "omega") p = perm_omega();
            else if (word == "d") p = perm_d();
            else if (word == "down") p = perm_down();
            else if (word == "Down") p = perm_Down();
            else if (word == "star") p = perm_star();
            else throw ParseError("unknown name '" + word + "'", start);
            expect('(', "'('");
            ExprPtr arg = parse_expr();
            expect(')', "')'");
            auto n = std::make_shared<ExprNode>();
            n->node = AutoNode{word, p, arg};
            n->pos = start;
            return n;
        }
        throw ParseError("expected a generator, bracket, automorphism or '('", pos);
    }

    // Returns the term and its explicit coefficient, when one was written.
    std::pair<ExprPtr, std::optional<Rational>> parse_term() {
        if (at_digit()) {
            Rational q = parse_rational();
            expect('*', "'*' after coefficient");
            return {parse_factor(), q};
        }
        return {parse_factor(), std::nullopt};
    }

    ExprPtr parse_expr() {
        skip_ws();
        std::size_t start = pos;
        bool lead_neg = false;
        bool lead_sign = false;
        if (peek() == '-') {
            ++pos;
            lead_neg = true;
            lead_sign = true;
        } else if (peek() == '+') {
            ++pos;
            lead_sign = true;
        }
        auto [first, coeff] = parse_term();
        std::vector<std::pair<Rational, ExprPtr>> terms;
        Rational c0 = coeff.value_or(Rational(1));
        if (lead_neg) c0 = -c0;
        terms.emplace_back(c0, first);
        bool explicit_sum = lead_sign || coeff.has_value();
        while (peek() == '+' || peek() == '-') {
            bool neg = (peek() == '-');
            ++pos;
            auto [node, c] = parse_term();
            Rational q = c.value_or(Rational(1));
            if (neg) q = -q;
            terms.emplace_back(q, node);
            explicit_sum = true;
        }
        if (!explicit_sum && terms.size() == 1) return terms[0].second;
        auto n = std::make_shared<ExprNode>();
        n->node = SumNode{std::move(terms)};
        n->pos = start;
        return n;
    }
};

}  // namespace

ExprPtr parse(const std::string& input) {
    Parser p(input);
    ExprPtr ast = p.parse_expr();
    if (!p.eof()) throw ParseError("unexpected trailing input", p.pos);
    return ast;
}

namespace {

TetraElem evaluate_rec(const ExprPtr& ast, const Permutation& pending) {
    if (std::holds_alternative<GenNode>(ast->node)) {
        const auto& g = std::get<GenNode>(ast->node).g;
        return generator_image(make_generator(pending(g.i), pending(g.j)));
    }
    if (std::holds_alternative<BracketNode>(ast->node)) {
        const auto& b = std::get<BracketNode>(ast->node);
        return tetra_bracket(evaluate_rec(b.lhs, pending), evaluate_rec(b.rhs, pending));
    }
    if (std::holds_alternative<SumNode>(ast->node)) {
        TetraElem acc;
        for (const auto& [q, term] : std::get<SumNode>(ast->node).terms)
            acc = acc + q * evaluate_rec(term, pending);
        return acc;
    }
    const auto& a = std::get<AutoNode>(ast->node);
    // Right action: the inner automorphism is applied first, so it composes
    // before the pending outer one.
    return evaluate_rec(a.arg, perm_compose(a.perm, pending));
}

}  // namespace

TetraElem evaluate(const ExprPtr& ast) { return evaluate_rec(ast, perm_identity()); }

TetraElem s4_act(const ExprPtr& ast, const Permutation& tau) { return evaluate_rec(ast, tau); }

namespace {

void print_rec(std::ostringstream& os, const ExprPtr& ast, bool parenthesize_sum) {
    if (std::holds_alternative<GenNode>(ast->node)) {
        const auto& g = std::get<GenNode>(ast->node).g;
        os << "X" << g.i << g.j;
        return;
    }
    if (std::holds_alternative<BracketNode>(ast->node)) {
        const auto& b = std::get<BracketNode>(ast->node);
        os << "[";
        print_rec(os, b.lhs, false);
        os << ", ";
        print_rec(os, b.rhs, false);
        os << "]";
        return;
    }
    if (std::holds_alternative<AutoNode>(ast->node)) {
        const auto& a = std::get<AutoNode>(ast->node);
        os << a.name << "(";
        print_rec(os, a.arg, false);
        os << ")";
        return;
    }
    const auto& s = std::get<SumNode>(ast->node);
    if (parenthesize_sum) os << "(";
    bool single = s.terms.size() == 1;
    bool first = true;
    for (const auto& [q, term] : s.terms) {
        Rational mag = abs(q);
        if (first) {
            if (sgn(q) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(q) < 0 ? " - " : " + ");
        }
        // A singleton sum keeps its explicit coefficient so that reparsing
        // rebuilds the same Sum node instead of the bare factor.
        bool need_coeff = (mag != 1) || single;
        if (need_coeff) os << rat_str(mag) << "*";
        bool inner_sum = std::holds_alternative<SumNode>(term->node);
        print_rec(os, term, inner_sum);
    }
    if (parenthesize_sum) os << ")";
}

}  // namespace

std::string print(const ExprPtr& ast) {
    std::ostringstream os;
    print_rec(os, ast, false);
    return os.str();
}

bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    if (std::holds_alternative<GenNode>(a->node)) {
        const auto& ga = std::get<GenNode>(a->node).g;
        const auto& gb = std::get<GenNode>(b->node).g;
        return ga.i == gb.i && ga.j == gb.j;
    }
    if (std::holds_alternative<BracketNode>(a->node)) {
        const auto& ba = std::get<BracketNode>(a->node);
        const auto& bb = std::get<BracketNode>(b->node);
        return ast_equal(ba.lhs, bb.lhs) && ast_equal(ba.rhs, bb.rhs);
    }
    if (std::holds_alternative<SumNode>(a->node)) {
        const auto& sa = std::get<SumNode>(a->node);
        const auto& sb = std::get<SumNode>(b->node);
        if (sa.terms.size() != sb.terms.size()) return false;
        for (std::size_t k = 0; k < sa.terms.size(); ++k) {
            if (sa.terms[k].first != sb.terms[k].first) return false;
            if (!ast_equal(sa.terms[k].second, sb.terms[k].second)) return false;
        }
        return true;
    }
    const auto& aa = std::get<AutoNode>(a->node);
    const auto& ab = std::get<AutoNode>(b->node);
    return aa.name == ab.name && aa.perm == ab.perm && ast_equal(aa.arg, ab.arg);
}

}  // namespace tetra
