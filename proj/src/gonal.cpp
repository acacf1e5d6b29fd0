#include "cyclecalc/gonal.hpp"

#include <set>

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/errors.hpp"

namespace cyclecalc {

namespace {

std::string pushforward_label(long n) {
    if (n == 1) return "C";
    if (n == -1) return "C^-";
    if (n < 0) return "(" + std::to_string(n) + ")_*C";
    return std::to_string(n) + "_*C";
}

void require_distinct_nonzero(const std::vector<long>& basis) {
    const std::set<long> s(basis.begin(), basis.end());
    if (s.size() != basis.size() || s.count(0)) throw DomainError("basis entries must be distinct and nonzero");
}

Matrix vandermonde_rows(const std::vector<long>& nodes, int first_weight, int last_weight) {
    Matrix m;
    for (long n : nodes) {
        Vector row;
        for (int w = first_weight; w <= last_weight; ++w) row.emplace_back(ipow(n, static_cast<unsigned>(w)));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

GonalContext::GonalContext(int genus, int gonality) : genus_(genus), gonality_(gonality) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    if (gonality < 2) throw DomainError("gonality must be >= 2");
}

std::string GonalContext::warning() const {
    if (!exceeds_gonality_bound()) return {};
    return "gonality " + std::to_string(gonality_) + " exceeds (g+3)/2 for g=" + std::to_string(genus_) +
           "; every such curve also has a pencil of lower degree";
}

GammaCombination p_n_operator(int gonality, long n) {
    GammaCombination p;
    for (long k = 0; k <= gonality; ++k) {
        const Rational c(binom(gonality, k));
        p.add(n + 1 - k, k % 2 == 0 ? c : -c);
    }
    return p;
}

GammaCombination f_d_combination(int gonality) {
    const long d = gonality;
    GammaCombination f = GammaCombination::single(1, -1);
    for (long k = 1; k <= d - 2; ++k) {
        Rational c(binom(d - 1, d - 2 - k), BigInt(k));
        f.add(-k, (k % 2 == 1) ? c : -c);  // (-1)^(k+1)
    }
    f *= Rational(d);
    return f;
}

GammaCombination p_n_relation_combination(int gonality, long n) {
    return p_n_operator(gonality, n) + f_d_combination(gonality);
}

Relation p_n_relation(const GonalContext& ctx, long n) {
    Relation r{apply_combination(p_n_relation_combination(ctx.gonality(), n), unit_curve(ctx.genus())),
               "P_" + std::to_string(n) + " C + F_" + std::to_string(ctx.gonality())};
    if (!quotient(r.cycle, ctx.level()).is_zero())
        throw IdentityViolation("relation " + r.provenance + " does not vanish modulo " + ctx.level().name() +
                                ": " + r.cycle.str());
    return r;
}

std::set<int> derive_vanishing(const GonalContext& ctx) {
    const int g = ctx.genus();
    const int d = ctx.gonality();
    const CurveClass c = unit_curve(g);
    const RingElement ideal_gen = pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(d + 1));

    // relation rows over weights 1..g+1; 2g+3 shifts m is more than enough
    // to separate the polynomials m -> Delta^{d+1}[x^i](m) of degree < g+1
    Matrix rows;
    for (long m = -(g + 1); m <= g + 1; ++m)
        rows.push_back(apply_operator(pontryagin(gamma(g, m), ideal_gen), c).coeffs());
    const std::size_t base_rank = rows.empty() ? 0 : rank(rows);

    std::set<int> vanishing;
    for (int w = 2; w <= g + 1; ++w) {
        Matrix extended = rows;
        extended.push_back(CurveClass::generator(g, w).coeffs());
        if (rank(std::move(extended)) == base_rank) vanishing.insert(w);
    }

    // Weight 1: the relations P_n C + F_d act on it by d(1-d) != 0, and for d >= 3
    // the projector congruence gives the same conclusion independently.
    const Rational weight_one = p_n_relation_combination(d, 0).weight_scalar(1);
    bool weight_one_killed = !weight_one.is_zero();
    if (d >= 3 && 2 * g >= d) {
        const bool second_route = pi_combination(ctx).kills_weight_one;
        if (second_route != weight_one_killed)
            throw IdentityViolation("weight-1 vanishing routes disagree for d=" + std::to_string(d));
    }
    if (!weight_one_killed) throw IdentityViolation("weight-1 relation scalar vanished");
    vanishing.insert(1);
    return vanishing;
}

GammaCombination g_n_combination(int gonality, int n) {
    if (n < 1 || n > gonality)
        throw DomainError("G_n needs 1 <= n <= d, got n=" + std::to_string(n));
    GammaCombination out;
    for (long k = 1; k <= n; ++k) {
        Rational c(binom(gonality, n - k), BigInt(k));
        out.add(k, k % 2 == 1 ? c : -c);
    }
    return out;
}

CurveClass g_n_pushforward(const GonalContext& ctx, int n) {
    return quotient(apply_combination(g_n_combination(ctx.gonality(), n), unit_curve(ctx.genus())), ctx.level());
}

GammaCombination pencil_chain(int gonality, int k, long l) {
    if (k < 0 || k > gonality - 1) throw DomainError("H_k needs k+1 <= d");
    if (k == 0) return GammaCombination::single(l);
    GammaCombination out = GammaCombination::single(l, Rational(binom(gonality, k)));
    out += Rational(gonality) * recursive_g_n_combination(gonality, k);
    out -= pencil_chain(gonality, k - 1, l + 1);
    return out;
}

GammaCombination recursive_g_n_combination(int gonality, int n) {
    if (n < 1 || n > gonality - 1) throw DomainError("G_n needs 1 <= n <= d-1, got n=" + std::to_string(n));
    if (n == 1) return GammaCombination::single(1);
    GammaCombination g = GammaCombination::single(1, Rational(binom(gonality, n - 1)));
    g += Rational(gonality) * recursive_g_n_combination(gonality, n - 1);
    g -= pencil_chain(gonality, n - 2, 2);  // (Phi^{n-1}_{1,1})_* Delta_{n-1}
    g *= Rational(1, n);
    return g;
}

CurveClass recursive_gn(const GonalContext& ctx, int n) {
    const GammaCombination rec = recursive_g_n_combination(ctx.gonality(), n);
    const GammaCombination closed = g_n_combination(ctx.gonality(), n);
    if (!(rec == closed))
        throw IdentityViolation("recursion for G_" + std::to_string(n) + " gives " + rec.str("C") +
                                ", closed form gives " + closed.str("C"));
    return quotient(apply_combination(rec, unit_curve(ctx.genus())), ctx.level());
}

PiCombinationResult pi_combination(const GonalContext& ctx) {
    const int g = ctx.genus();
    const int d = ctx.gonality();
    if (d < 3) throw DomainError("projector congruence needs d >= 3");
    if (2 * g < d) throw DomainError("projector congruence needs 2g >= d");
    const IdealMask mask{g, d + 1};
    const RingElement unit = gamma(g, 0);
    const RingElement log1 = log_gamma1(g);
    const std::size_t top = static_cast<std::size_t>(2 * g);

    auto combine = [&](const GammaCombination& p0, const GammaCombination& pm1) {
        GammaCombination inner = Rational(1, d - 1) * p0;
        inner -= Rational(1, d) * pm1;
        return compose(gamma(g, -1), inner.realize(g));
    };

    PiCombinationResult r{.lhs = combine(p_n_relation_combination(d, 0), p_n_relation_combination(d, -1)),
                          .c = 0,
                          .c1 = 0,
                          .residual_log = RingElement::zero(g),
                          .residual_sum = RingElement::zero(g),
                          .weight_one_action = 0,
                          .bare_residual = RingElement::zero(g)};

    const RingElement diff_log = reduce_mod(r.lhs - log1, mask);
    r.c = diff_log.pi_coeffs()[top];
    r.residual_log = reduce_mod(diff_log - r.c * unit, mask);
    r.log_congruence = r.residual_log.is_zero();

    GammaCombination target;
    for (long n = 1; n <= d; ++n) {
        Rational c(binom(d, n), BigInt(n));
        target.add(n, n % 2 == 1 ? c : -c);
    }
    const RingElement diff_sum = reduce_mod(r.lhs - target.realize(g), mask);
    r.c1 = diff_sum.pi_coeffs()[top];
    r.residual_sum = reduce_mod(diff_sum - r.c1 * unit, mask);
    r.sum_congruence = r.residual_sum.is_zero();
    r.verified = r.log_congruence && r.sum_congruence;

    const Vector coords = r.lhs.pi_coeffs();
    r.weight_one_action = coords[top - 1];
    r.kills_weight_one = r.weight_one_action == Rational(1);
    for (int w = 2; w <= d; ++w)
        if (!coords[top - static_cast<std::size_t>(w)].is_zero()) r.kills_weight_one = false;

    const RingElement bare = combine(p_n_operator(d, 0), p_n_operator(d, -1));
    const RingElement bare_diff = reduce_mod(bare - log1, mask);
    r.bare_residual = reduce_mod(bare_diff - bare_diff.pi_coeffs()[top] * unit, mask);
    r.bare_operator_congruence = r.bare_residual.is_zero();
    return r;
}

std::vector<long> default_basis(int gonality) {
    std::vector<long> b;
    for (long k = 1; static_cast<int>(b.size()) < gonality - 1; ++k) {
        b.push_back(k);
        if (static_cast<int>(b.size()) < gonality - 1) b.push_back(-k);
    }
    return b;
}

ClosedForms express_components(const GonalContext& ctx, const std::vector<long>& basis) {
    const int d = ctx.gonality();
    const int g = ctx.genus();
    if (static_cast<int>(basis.size()) != d - 1) throw DomainError("basis must have d-1 entries");
    if (g < d - 1) throw DomainError("need g >= d-1 so that C_(2)..C_(d) exist");
    require_distinct_nonzero(basis);

    const Matrix inv = inverse(vandermonde_rows(basis, 2, d));
    ClosedForms out;
    out.generators = basis;
    for (long n : basis) out.labels.push_back(pushforward_label(n));
    const CurveClass c = unit_curve(g);
    for (int w = 2; w <= d; ++w) {
        const Vector& row = inv[static_cast<std::size_t>(w - 2)];
        GammaCombination comb;
        for (std::size_t j = 0; j < basis.size(); ++j) comb.add(basis[j], row[j]);
        if (!(quotient(apply_combination(comb, c), ctx.level()) == CurveClass::generator(g, w)))
            throw IdentityViolation("component C_(" + std::to_string(w) + ") not recovered");
        out.components.emplace(w, row);
    }
    return out;
}

ClosedForms closed_forms(const GonalContext& ctx) {
    if (ctx.gonality() != 3 && ctx.gonality() != 4) throw DomainError("closed forms are tabulated for d = 3, 4");
    const std::vector<long> gens{1, -1, 2};
    return express_components(ctx, {gens.begin(), gens.begin() + (ctx.gonality() - 1)});
}

Vector express_nstar(const GonalContext& ctx, long n, const std::vector<long>& basis) {
    const int d = ctx.gonality();
    if (static_cast<int>(basis.size()) != d - 1) throw DomainError("basis must have d-1 entries");
    if (ctx.genus() < d - 1) throw DomainError("need g >= d-1");
    require_distinct_nonzero(basis);
    // sum_j x_j n_j^w = n^w for w = 2..d
    const Matrix rows = vandermonde_rows(basis, 2, d);
    Matrix a(rows.front().size(), Vector(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t w = 0; w < rows[j].size(); ++w) a[w][j] = rows[j][w];
    Vector rhs;
    for (int w = 2; w <= d; ++w) rhs.emplace_back(ipow(n, static_cast<unsigned>(w)));
    return solve(a, rhs);
}

std::string ClosedForms::str() const {
    std::string s;
    for (const auto& [w, row] : components) {
        std::string rhs;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            const Rational& c = row[j];
            if (c.is_zero()) continue;
            const Rational mag = c.sign() < 0 ? -c : c;
            rhs += rhs.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            rhs += (mag == Rational(1) ? "" : mag.str() + "*") + labels[j];
        }
        if (!s.empty()) s += "\n";
        s += "C_(" + std::to_string(w) + ") ~alg " + (rhs.empty() ? "0" : rhs);
    }
    return s;
}

}  // namespace cyclecalc
