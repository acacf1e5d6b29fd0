#include "cyclecalc/dsl/parser.hpp"

#include <charconv>
#include <set>

#include "cyclecalc/dsl/lexer.hpp"

namespace cyclecalc::dsl {

namespace {

const std::set<std::string> kPrimaryStarts{"number", "'('", "'-'", "gamma", "pi", "log1", "transpose", "push",
                                           "W", "C", "Cminus", "ceresa", "gs"};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (peek().kind != Tok::end) fail("unexpected " + shown(peek()), {describe(Tok::end)});
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> tried_;

    const Token& peek() const { return toks_[pos_]; }

    bool accept(Tok t) {
        if (peek().kind == t) {
            ++pos_;
            tried_.clear();
            return true;
        }
        tried_.insert(describe(t));
        return false;
    }

    const Token& expect(Tok t) {
        if (peek().kind != t) fail("unexpected " + shown(peek()), {describe(t)});
        const Token& tok = toks_[pos_++];
        tried_.clear();
        return tok;
    }

    static std::string shown(const Token& t) {
        return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    }

    [[noreturn]] void fail(const std::string& message, std::set<std::string> expected) {
        expected.insert(tried_.begin(), tried_.end());
        throw SyntaxError("syntax", peek().offset, message, std::move(expected));
    }

    static ExprPtr node(Node k, std::size_t offset, std::vector<ExprPtr> args = {}, std::optional<Index> idx = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->offset = offset;
        e->args = std::move(args);
        e->index = std::move(idx);
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            const std::size_t at = peek().offset;
            if (accept(Tok::plus))
                lhs = node(Node::add, at, {lhs, term()});
            else if (accept(Tok::minus))
                lhs = node(Node::sub, at, {lhs, term()});
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = apply();
        while (true) {
            const std::size_t at = peek().offset;
            if (!accept(Tok::star)) return lhs;
            lhs = node(Node::mul, at, {lhs, apply()});
        }
    }

    ExprPtr apply() {
        ExprPtr op = compose();
        const std::size_t at = peek().offset;
        if (!accept(Tok::at)) return op;
        return node(Node::apply, at, {op, apply()});
    }

    ExprPtr compose() {
        ExprPtr lhs = power();
        while (true) {
            const std::size_t at = peek().offset;
            if (!accept(Tok::dot)) return lhs;
            lhs = node(Node::compose, at, {lhs, power()});
        }
    }

    ExprPtr power() {
        ExprPtr base = unary();
        const std::size_t at = peek().offset;
        if (!accept(Tok::starstar)) return base;
        Index k = index_atom();
        return node(Node::power, at, {base}, std::move(k));
    }

    ExprPtr unary() {
        const std::size_t at = peek().offset;
        if (accept(Tok::minus)) return node(Node::neg, at, {unary()});
        return primary();
    }

    ExprPtr call_with_index(Node k, const Token& name) {
        expect(Tok::lparen);
        Index i = index_expr();
        expect(Tok::rparen);
        return node(k, name.offset, {}, std::move(i));
    }

    ExprPtr primary() {
        const Token tok = peek();
        if (tok.kind == Tok::number) {
            ++pos_;
            tried_.clear();
            auto e = std::make_shared<Expr>();
            e->kind = Node::scalar;
            e->offset = tok.offset;
            try {
                e->scalar = Rational::parse(tok.text);
            } catch (const std::exception&) {
                throw SyntaxError("lexical", tok.offset, "invalid rational literal '" + tok.text + "'");
            }
            return e;
        }
        if (accept(Tok::lparen)) {
            ExprPtr inner = expr();
            expect(Tok::rparen);
            return inner;
        }
        if (tok.kind != Tok::ident) fail("unexpected " + shown(tok), kPrimaryStarts);
        ++pos_;
        tried_.clear();
        const std::string& n = tok.text;
        if (n == "gamma") return call_with_index(Node::gamma, tok);
        if (n == "pi") return call_with_index(Node::pi, tok);
        if (n == "W") return call_with_index(Node::w, tok);
        if (n == "log1") return node(Node::log1, tok.offset);
        if (n == "C") return node(Node::curve, tok.offset);
        if (n == "Cminus") return node(Node::curve_minus, tok.offset);
        if (n == "ceresa") return node(Node::ceresa, tok.offset);
        if (n == "gs") return node(Node::gs, tok.offset);
        if (n == "transpose") {
            expect(Tok::lparen);
            ExprPtr inner = expr();
            expect(Tok::rparen);
            return node(Node::transpose, tok.offset, {inner});
        }
        if (n == "push") {
            expect(Tok::lparen);
            Index i = index_expr();
            expect(Tok::comma);
            ExprPtr inner = expr();
            expect(Tok::rparen);
            return node(Node::push, tok.offset, {inner}, std::move(i));
        }
        --pos_;
        if (n == "g") fail("the symbol g is only valid inside an index", kPrimaryStarts);
        fail("unknown identifier '" + n + "'", kPrimaryStarts);
    }

    // index expressions

    Index index_expr() {
        Index lhs = index_term();
        while (true) {
            const std::size_t at = peek().offset;
            Index::Kind k;
            if (accept(Tok::plus))
                k = Index::Kind::add;
            else if (accept(Tok::minus))
                k = Index::Kind::sub;
            else
                return lhs;
            Index rhs = index_term();
            lhs = Index{k, 0, {std::move(lhs), std::move(rhs)}, at};
        }
    }

    Index index_term() {
        Index lhs = index_factor();
        while (true) {
            const std::size_t at = peek().offset;
            if (!accept(Tok::star)) return lhs;
            Index rhs = index_factor();
            lhs = Index{Index::Kind::mul, 0, {std::move(lhs), std::move(rhs)}, at};
        }
    }

    Index index_factor() {
        const std::size_t at = peek().offset;
        if (accept(Tok::minus)) return Index{Index::Kind::neg, 0, {index_factor()}, at};
        return index_atom();
    }

    Index index_atom() {
        const Token tok = peek();
        if (tok.kind == Tok::number) {
            if (tok.text.find('/') != std::string::npos)
                throw SyntaxError("syntax", tok.offset, "index must be an integer, got '" + tok.text + "'", {"integer"});
            long v = 0;
            const auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
            if (res.ec != std::errc())
                throw SyntaxError("syntax", tok.offset, "integer '" + tok.text + "' out of range", {"integer"});
            ++pos_;
            tried_.clear();
            return Index{Index::Kind::literal, v, {}, tok.offset};
        }
        if (tok.kind == Tok::ident && tok.text == "g") {
            ++pos_;
            tried_.clear();
            return Index{Index::Kind::genus, 0, {}, tok.offset};
        }
        if (accept(Tok::lparen)) {
            Index inner = index_expr();
            expect(Tok::rparen);
            return inner;
        }
        fail("unexpected " + shown(tok) + " in index", {"integer", "g"});
    }
};

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(lex(source)).parse_all(); }

}  // namespace cyclecalc::dsl
