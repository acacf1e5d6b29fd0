#include "cyclecalc/dsl/ast.hpp"

#include "cyclecalc/errors.hpp"

namespace cyclecalc::dsl {

namespace {

long checked(long a, long b, char op) {
    long r = 0;
    const bool overflow = op == '+' ? __builtin_add_overflow(a, b, &r)
                        : op == '-' ? __builtin_sub_overflow(a, b, &r)
                                    : __builtin_mul_overflow(a, b, &r);
    if (overflow) throw DomainError("index expression overflows");
    return r;
}

int index_prec(const Index& i) {
    switch (i.kind) {
        case Index::Kind::add:
        case Index::Kind::sub: return 1;
        case Index::Kind::mul: return 2;
        default: return 3;
    }
}

std::string index_str(const Index& i, int need) {
    std::string s;
    switch (i.kind) {
        case Index::Kind::literal: s = std::to_string(i.value); break;
        case Index::Kind::genus: s = "g"; break;
        case Index::Kind::add: s = index_str(i.args[0], 1) + "+" + index_str(i.args[1], 2); break;
        case Index::Kind::sub: s = index_str(i.args[0], 1) + "-" + index_str(i.args[1], 2); break;
        case Index::Kind::mul: s = index_str(i.args[0], 2) + "*" + index_str(i.args[1], 3); break;
        case Index::Kind::neg: s = "-" + index_str(i.args[0], 3); break;
    }
    return index_prec(i) < need ? "(" + s + ")" : s;
}

int prec(const Expr& e) {
    switch (e.kind) {
        case Node::add:
        case Node::sub: return 1;
        case Node::mul: return 2;
        case Node::apply: return 3;
        case Node::compose: return 4;
        case Node::power: return 5;
        case Node::neg: return 6;
        default: return 7;
    }
}

std::string exponent_str(const Index& i) {
    if (i.kind == Index::Kind::literal || i.kind == Index::Kind::genus) return pretty(i);
    return "(" + pretty(i) + ")";
}

std::string expr_str(const Expr& e, int need) {
    auto child = [&](std::size_t k, int n) { return expr_str(*e.args[k], n); };
    std::string s;
    switch (e.kind) {
        case Node::scalar: s = e.scalar.str(); break;
        case Node::gamma: s = "gamma(" + pretty(*e.index) + ")"; break;
        case Node::pi: s = "pi(" + pretty(*e.index) + ")"; break;
        case Node::log1: s = "log1"; break;
        case Node::transpose: s = "transpose(" + child(0, 1) + ")"; break;
        case Node::mul: s = child(0, 2) + " * " + child(1, 3); break;
        case Node::compose: s = child(0, 4) + " . " + child(1, 5); break;
        case Node::power: s = child(0, 6) + "**" + exponent_str(*e.index); break;
        case Node::add: s = child(0, 1) + " + " + child(1, 2); break;
        case Node::sub: s = child(0, 1) + " - " + child(1, 2); break;
        case Node::neg: s = "-" + child(0, 6); break;
        case Node::apply: s = child(0, 4) + " @ " + child(1, 3); break;
        case Node::curve: s = "C"; break;
        case Node::curve_minus: s = "Cminus"; break;
        case Node::push: s = "push(" + pretty(*e.index) + ", " + child(0, 1) + ")"; break;
        case Node::w: s = "W(" + pretty(*e.index) + ")"; break;
        case Node::ceresa: s = "ceresa"; break;
        case Node::gs: s = "gs"; break;
    }
    return prec(e) < need ? "(" + s + ")" : s;
}

}  // namespace

long Index::eval(int genus) const {
    switch (kind) {
        case Kind::literal: return value;
        case Kind::genus: return genus;
        case Kind::neg: return checked(0, args[0].eval(genus), '-');
        case Kind::add: return checked(args[0].eval(genus), args[1].eval(genus), '+');
        case Kind::sub: return checked(args[0].eval(genus), args[1].eval(genus), '-');
        case Kind::mul: return checked(args[0].eval(genus), args[1].eval(genus), '*');
    }
    return 0;
}

bool Index::mentions_genus() const {
    if (kind == Kind::genus) return true;
    for (const auto& a : args)
        if (a.mentions_genus()) return true;
    return false;
}

bool same_shape(const Index& a, const Index& b) {
    if (a.kind != b.kind || a.value != b.value || a.args.size() != b.args.size()) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!same_shape(a.args[k], b.args[k])) return false;
    return true;
}

bool same_shape(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    if (a.kind == Node::scalar && a.scalar != b.scalar) return false;
    if (a.index.has_value() != b.index.has_value()) return false;
    if (a.index && !same_shape(*a.index, *b.index)) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!same_shape(*a.args[k], *b.args[k])) return false;
    return true;
}

bool is_constant(const Expr& e) {
    switch (e.kind) {
        case Node::scalar: return true;
        case Node::neg: return is_constant(*e.args[0]);
        case Node::add:
        case Node::sub:
        case Node::mul: return is_constant(*e.args[0]) && is_constant(*e.args[1]);
        default: return false;
    }
}

std::string pretty(const Index& i) { return index_str(i, 1); }

std::string pretty(const Expr& e) { return expr_str(e, 1); }

std::string tree(const Expr& e) {
    auto t = [&](std::size_t k) { return tree(*e.args[k]); };
    switch (e.kind) {
        case Node::scalar: return e.scalar.str();
        case Node::gamma: return "gamma(" + pretty(*e.index) + ")";
        case Node::pi: return "pi(" + pretty(*e.index) + ")";
        case Node::log1: return "log1";
        case Node::transpose: return "transpose(" + t(0) + ")";
        case Node::mul: {
            const bool scaling = is_constant(*e.args[0]) || is_constant(*e.args[1]);
            return std::string(scaling ? "scale(" : "pontryagin(") + t(0) + ", " + t(1) + ")";
        }
        case Node::compose: return "compose(" + t(0) + ", " + t(1) + ")";
        case Node::power: return "pontryagin_power(" + t(0) + ", " + pretty(*e.index) + ")";
        case Node::add: return "add(" + t(0) + ", " + t(1) + ")";
        case Node::sub: return "sub(" + t(0) + ", " + t(1) + ")";
        case Node::neg: return "neg(" + t(0) + ")";
        case Node::apply: return "apply(" + t(0) + ", " + t(1) + ")";
        case Node::curve: return "C";
        case Node::curve_minus: return "Cminus";
        case Node::push: return "push(" + pretty(*e.index) + ", " + t(0) + ")";
        case Node::w: return "W(" + pretty(*e.index) + ")";
        case Node::ceresa: return "ceresa";
        case Node::gs: return "gs";
    }
    return "?";
}

}  // namespace cyclecalc::dsl
