#include "cyclecalc/surfaces.hpp"

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/errors.hpp"
#include "cyclecalc/gonal.hpp"

namespace cyclecalc {

namespace {

Rational b(long n, long k) { return Rational(binom(n, k)); }

// Theta . G_n summed over the class of G_n in the symmetric product.
Rational theta_degree_sum(long g, long d, long n) {
    Rational s(0);
    for (long k = 0; k <= n - 1; ++k)
        s += b(d - g - 1, k) * b(g, n - k) * Rational(factorial(static_cast<unsigned>(n - k)),
                                                      factorial(static_cast<unsigned>(n - 1 - k)));
    return s;
}

std::string where(const SurfaceContext& ctx) {
    return " (g=" + std::to_string(ctx.genus()) + ", d=" + std::to_string(ctx.gonality()) +
           ", n=" + std::to_string(ctx.index()) + ")";
}

}  // namespace

SurfaceContext::SurfaceContext(int genus, int gonality, int index)
    : genus_(genus), gonality_(gonality), index_(index) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    if (gonality < 2) throw DomainError("gonality must be >= 2");
    if (index < 1 || index > gonality - 1) throw DomainError("surface index needs 1 <= n <= d-1");
}

std::string to_string(SurfaceCurve c) {
    switch (c) {
        case SurfaceCurve::C: return "C";
        case SurfaceCurve::G: return "G_n";
        case SurfaceCurve::Delta: return "Delta_n";
        case SurfaceCurve::H: return "H_n";
    }
    return "?";
}

std::string to_string(DeltaVariant v) {
    switch (v) {
        case DeltaVariant::display: return "display";
        case DeltaVariant::equation: return "equation";
        case DeltaVariant::both: return "both";
        case DeltaVariant::neither: return "neither";
    }
    return "?";
}

void IntersectionTable::set(SurfaceCurve a, SurfaceCurve b, BigInt v) {
    if (b < a) std::swap(a, b);
    entries_[{a, b}] = std::move(v);
}

std::optional<BigInt> IntersectionTable::at(SurfaceCurve a, SurfaceCurve b) const {
    if (b < a) std::swap(a, b);
    auto it = entries_.find({a, b});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

IntersectionTable intersection_table(const SurfaceContext& ctx) {
    const long g = ctx.genus();
    const long d = ctx.gonality();
    const long n = ctx.index();
    using S = SurfaceCurve;
    IntersectionTable t;
    t.set(S::C, S::C, 0);
    t.set(S::G, S::G, 0);
    t.set(S::C, S::G, 1);
    t.set(S::C, S::Delta, n);
    t.set(S::G, S::Delta, binom(d - 1, n - 1));
    t.set(S::H, S::C, d - n);
    t.set(S::H, S::G, binom(d - 1, n));
    if (n == 1) {
        // simple ramification points of the d:1 map
        t.set(S::H, S::Delta, 2 * (g + d - 1));
        t.set(S::Delta, S::Delta, 2 - 2 * g);
    }
    return t;
}

TwoRoute gn_theta_degree(const SurfaceContext& ctx) {
    const long g = ctx.genus();
    const long d = ctx.gonality();
    const long n = ctx.index();
    TwoRoute r{theta_degree_sum(g, d, n), Rational(g) * b(d - 2, n - 1)};
    if (r.route_a != r.route_b)
        throw IdentityViolation("G_n.Theta routes disagree: " + r.route_a.str() + " vs " + r.route_b.str() + where(ctx));
    return r;
}

DeltaHomology delta_homology_coeff(const SurfaceContext& ctx) {
    const long d = ctx.gonality();
    const long n = ctx.index();
    DeltaHomology h;

    Rational first(0);
    for (long k = 1; k <= n - 1; ++k) first += Rational(k % 2 == 1 ? k : -k) * b(d - 1, n - 1 - k);
    Rational second(0);
    for (long k = 2; k <= n + 1; ++k) second += Rational(k % 2 == 0 ? k * k : -k * k) * b(d, n + 1 - k);
    h.sum_route = Rational(d) * first + second;

    // (Phi^n_{1,1})_* Delta_n = (Phi^{n-1}_{1,2})_* H_{n-1}
    h.chain_route = pencil_chain(static_cast<int>(d), static_cast<int>(n - 1), 2).weight_scalar(2);

    const Rational tail = b(d, n) - Rational(n + 1) * b(d - 2, n);
    h.display_variant = Rational(d) * b(d - 2, n - 2) + tail;
    h.equation_variant = Rational(d) * b(d - 2, n - 1) + tail;

    if (h.sum_route != h.chain_route)
        throw IdentityViolation("Delta_n homology routes disagree: " + h.sum_route.str() + " vs " +
                                h.chain_route.str() + where(ctx));
    const bool disp = h.display_variant == h.sum_route;
    const bool eq = h.equation_variant == h.sum_route;
    h.consistent = disp && eq ? DeltaVariant::both
                 : disp       ? DeltaVariant::display
                 : eq         ? DeltaVariant::equation
                              : DeltaVariant::neither;
    if (h.consistent == DeltaVariant::neither)
        throw IdentityViolation("no closed form matches the Delta_n homology degree" + where(ctx));
    return h;
}

NSRelation solve_hn_with(const SurfaceContext& ctx, const Rational& delta_coefficient) {
    const long g = ctx.genus();
    const long d = ctx.gonality();
    const long n = ctx.index();
    const IntersectionTable t = intersection_table(ctx);
    using S = SurfaceCurve;
    auto x = [&](S p, S q) { return Rational(*t.at(p, q)); };

    // [G_k] = (1/g) Theta.G_k; G_{n+1} for n+1 = d is a rational curve and the sum gives 0
    const Rational gn_class = theta_degree_sum(g, d, n) / Rational(g);
    const Rational gn1_class = theta_degree_sum(g, d, n + 1) / Rational(g);

    NSRelation r;
    r.delta_coefficient = delta_coefficient;
    r.system = {
        {Rational(1), gn_class, delta_coefficient},
        {x(S::C, S::C), x(S::G, S::C), x(S::Delta, S::C)},
        {x(S::C, S::G), x(S::G, S::G), x(S::Delta, S::G)},
    };
    r.rhs = {Rational(n + 1) * gn1_class, x(S::H, S::C), x(S::H, S::G)};
    const Vector sol = solve(r.system, r.rhs);
    r.a = sol[0];
    r.b = sol[1];
    r.c = sol[2];
    return r;
}

NSRelation solve_hn(const SurfaceContext& ctx) {
    const DeltaHomology h = delta_homology_coeff(ctx);
    NSRelation r = solve_hn_with(ctx, h.sum_route);
    const long d = ctx.gonality();
    const long n = ctx.index();
    if (r.a != b(d, n) || r.b != Rational(d) || r.c != Rational(-1))
        throw IdentityViolation("H_n = " + r.a.str() + " C + " + r.b.str() + " G_n + " + r.c.str() +
                                " Delta_n, expected (binom(d,n), d, -1)" + where(ctx));
    return r;
}

}  // namespace cyclecalc
