#include "cyclecalc/dsl/eval.hpp"

#include "cyclecalc/dsl/lexer.hpp"
#include "cyclecalc/dsl/parser.hpp"
#include "cyclecalc/errors.hpp"

namespace cyclecalc::dsl {

namespace {

constexpr long kMaxExponent = 4096;

[[noreturn]] void type_error(const Expr& e, const std::string& msg) { throw SyntaxError("type", e.offset, msg); }

std::string pair_str(Type a, Type b) { return to_string(a) + " and " + to_string(b); }

WDecomposition scale_w(const Rational& s, WDecomposition w) {
    for (auto& [weight, poly] : w.terms) {
        for (auto& [mono, c] : poly) c *= s;
        std::erase_if(poly, [](const auto& kv) { return kv.second.is_zero(); });
    }
    std::erase_if(w.terms, [](const auto& kv) { return kv.second.empty(); });
    return w;
}

class Evaluator {
public:
    explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

    Value run(const Expr& e) {
        const int g = ctx_.genus;
        auto idx = [&]() { return e.index->eval(g); };
        switch (e.kind) {
            case Node::scalar: return e.scalar;
            case Node::gamma: return gamma(g, idx());
            case Node::pi: {
                const long i = idx();
                if (i < 0 || i > 2 * g)
                    throw DomainError("pi(" + std::to_string(i) + ") needs 0 <= i <= 2g = " + std::to_string(2 * g));
                return pi(g, static_cast<int>(i));
            }
            case Node::log1: return log_gamma1(g);
            case Node::transpose: return transpose(std::get<RingElement>(run(*e.args[0])));
            case Node::power: {
                const long k = idx();
                if (k < 0) throw DomainError("Pontryagin exponent must be >= 0, got " + std::to_string(k));
                if (k > kMaxExponent) throw DomainError("Pontryagin exponent too large: " + std::to_string(k));
                return pontryagin_power(std::get<RingElement>(run(*e.args[0])), static_cast<unsigned>(k));
            }
            case Node::compose:
                return compose(std::get<RingElement>(run(*e.args[0])), std::get<RingElement>(run(*e.args[1])));
            case Node::mul: return mul(run(*e.args[0]), run(*e.args[1]));
            case Node::add:
            case Node::sub: return add(run(*e.args[0]), run(*e.args[1]), e.kind == Node::sub);
            case Node::neg: return mul(Rational(-1), run(*e.args[0]));
            case Node::apply: {
                const RingElement op = std::get<RingElement>(run(*e.args[0]));
                Value target = run(*e.args[1]);
                if (auto* c = std::get_if<CurveClass>(&target)) return apply_operator(op, *c);
                return apply_operator(op, std::get<WDecomposition>(target));
            }
            case Node::curve: return unit_curve(g);
            case Node::curve_minus: return push_forward(-1, unit_curve(g));
            case Node::ceresa: return ceresa(g);
            case Node::gs: return gross_schoen(g);
            case Node::push: {
                const long n = idx();
                Value target = run(*e.args[0]);
                if (auto* c = std::get_if<CurveClass>(&target)) return push_forward(n, *c);
                return apply_operator(gamma(g, n), std::get<WDecomposition>(target));
            }
            case Node::w: {
                const long m = idx();
                if (m < 1 || m > g - 1)
                    throw DomainError("W(" + std::to_string(m) + ") needs 1 <= m <= g-1 = " + std::to_string(g - 1));
                return decompose_w(g, static_cast<int>(g - m));
            }
        }
        throw DomainError("unhandled node");
    }

private:
    const EvalContext& ctx_;

    static Value mul(const Value& a, const Value& b) {
        if (auto* s = std::get_if<Rational>(&a)) {
            if (auto* t = std::get_if<Rational>(&b)) return *s * *t;
            if (auto* r = std::get_if<RingElement>(&b)) return *s * *r;
            if (auto* c = std::get_if<CurveClass>(&b)) return *s * *c;
            return scale_w(*s, std::get<WDecomposition>(b));
        }
        if (std::holds_alternative<Rational>(b)) return mul(b, a);
        return pontryagin(std::get<RingElement>(a), std::get<RingElement>(b));
    }

    static Value add(const Value& a, const Value& b, bool subtract) {
        const Rational sign = subtract ? Rational(-1) : Rational(1);
        if (auto* s = std::get_if<Rational>(&a)) return *s + sign * std::get<Rational>(b);
        if (auto* r = std::get_if<RingElement>(&a)) return *r + sign * std::get<RingElement>(b);
        return std::get<CurveClass>(a) + sign * std::get<CurveClass>(b);
    }
};

}  // namespace

std::string to_string(Type t) {
    switch (t) {
        case Type::scalar: return "scalar";
        case Type::ring: return "ring";
        case Type::cycle: return "cycle";
        case Type::w: return "W";
    }
    return "?";
}

Type typecheck(const Expr& e) {
    auto arg = [&](std::size_t k) { return typecheck(*e.args[k]); };
    switch (e.kind) {
        case Node::scalar: return Type::scalar;
        case Node::gamma:
        case Node::pi:
        case Node::log1: return Type::ring;
        case Node::transpose:
        case Node::power: {
            const Type t = arg(0);
            if (t != Type::ring)
                type_error(e, std::string(e.kind == Node::power ? "'**'" : "transpose") + " needs a ring operand, got " +
                                  to_string(t));
            return Type::ring;
        }
        case Node::compose: {
            const Type a = arg(0), b = arg(1);
            if (a != Type::ring || b != Type::ring) type_error(e, "'.' composes ring operators, got " + pair_str(a, b));
            return Type::ring;
        }
        case Node::mul: {
            const Type a = arg(0), b = arg(1);
            if (a == Type::scalar) return b;
            if (b == Type::scalar) return a;
            if (a == Type::ring && b == Type::ring) return Type::ring;
            if (a == Type::cycle && b == Type::cycle)
                type_error(e, "'*' of two cycles is not available; Pontryagin powers of C are written W(m)");
            type_error(e, "'*' needs two ring operators or a scalar factor, got " + pair_str(a, b));
        }
        case Node::add:
        case Node::sub: {
            const Type a = arg(0), b = arg(1);
            if (a != b) type_error(e, "cannot add " + pair_str(a, b));
            if (a == Type::w) type_error(e, "W expansions combine only through '@', push and scalar factors");
            return a;
        }
        case Node::neg: return arg(0);
        case Node::apply: {
            const Type a = arg(0), b = arg(1);
            if (a != Type::ring) type_error(e, "left side of '@' must be a ring operator, got " + to_string(a));
            if (b != Type::cycle && b != Type::w)
                type_error(e, "right side of '@' must be a cycle, got " + to_string(b));
            return b;
        }
        case Node::curve:
        case Node::curve_minus:
        case Node::ceresa:
        case Node::gs: return Type::cycle;
        case Node::push: {
            const Type t = arg(0);
            if (t != Type::cycle && t != Type::w) type_error(e, "push needs a cycle, got " + to_string(t));
            return t;
        }
        case Node::w: return Type::w;
    }
    type_error(e, "unknown node");
}

EvalContext EvalContext::make(int genus, std::optional<int> gonality, const std::string& level_name) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    if (gonality && *gonality < 2) throw DomainError("gonality must be >= 2");
    EvalContext ctx;
    ctx.genus = genus;
    ctx.gonality = gonality;
    ctx.level = EquivalenceLevel::parse(level_name, gonality);
    return ctx;
}

Value evaluate(const Expr& e, const EvalContext& ctx) {
    typecheck(e);
    Value v = Evaluator(ctx).run(e);
    if (auto* c = std::get_if<CurveClass>(&v)) return quotient(*c, ctx.level);
    if (auto* w = std::get_if<WDecomposition>(&v)) return quotient(*w, ctx.level);
    return v;
}

Value evaluate(std::string_view source, const EvalContext& ctx) { return evaluate(*parse(source), ctx); }

std::string render(const Value& v) {
    return std::visit([](const auto& x) -> std::string { return x.str(); }, v);
}

Type type_of(const Value& v) {
    switch (v.index()) {
        case 0: return Type::scalar;
        case 1: return Type::ring;
        case 2: return Type::cycle;
        default: return Type::w;
    }
}

}  // namespace cyclecalc::dsl
