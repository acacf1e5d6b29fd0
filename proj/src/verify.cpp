#include "cyclecalc/verify.hpp"

#include <functional>
#include <future>
#include <random>
#include <set>

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/dsl/eval.hpp"
#include "cyclecalc/gonal.hpp"
#include "cyclecalc/graded.hpp"
#include "cyclecalc/ring.hpp"
#include "cyclecalc/surfaces.hpp"

namespace cyclecalc {

namespace {

using Suite = std::function<std::vector<Check>(const VerifyOptions&)>;

std::string ctx_g(int g) { return "g=" + std::to_string(g); }
std::string ctx_gd(int g, int d) { return "g=" + std::to_string(g) + ", d=" + std::to_string(d); }
std::string ctx_dn(int d, int n) { return "d=" + std::to_string(d) + ", n=" + std::to_string(n); }

Check eq(std::string name, std::string context, std::string lhs, std::string rhs) {
    const bool ok = lhs == rhs;
    return {std::move(name), ok, std::move(lhs), std::move(rhs), std::move(context)};
}

Check holds(std::string name, std::string context, bool ok, std::string lhs, std::string rhs) {
    return {std::move(name), ok, std::move(lhs), std::move(rhs), std::move(context)};
}

// Many small cases folded into one check; lhs names the first failure.
class Tally {
public:
    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++cases_;
        if (!ok) {
            if (failures_ == 0) first_ = describe();
            ++failures_;
        }
    }
    Check finish(std::string name, std::string context) const {
        const std::string want = std::to_string(cases_) + " cases hold";
        if (failures_ == 0) return {std::move(name), true, want, want, std::move(context)};
        return {std::move(name), false, std::to_string(failures_) + " failing, first: " + first_, want, std::move(context)};
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

Check guarded(const std::string& name, const std::string& context, const std::function<Check()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {name, false, std::string("error: ") + e.what(), "no error", context};
    }
}

std::string set_str(const std::set<int>& s) {
    std::string out = "{";
    for (int w : s) out += (out.size() > 1 ? ", " : "") + std::to_string(w);
    return out + "}";
}

bool same_terms(const GammaCombination& a, const GammaCombination& b) {
    for (const auto& [n, c] : (a - b).terms())
        if (c != 0) return false;
    return true;
}

std::string triple(const Rational& a, const Rational& b, const Rational& c) {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

std::vector<Check> suite_qbinom(const VerifyOptions&) {
    std::vector<Check> out;
    {
        Tally t;
        for (long n = -8; n <= 12; ++n)
            for (long k = 0; k <= 12; ++k)
                t.expect(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k),
                         [&] { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); });
        out.push_back(t.finish("binomial_pascal", "n in [-8,12], k in [0,12]"));
    }
    out.push_back(guarded("vandermonde_convolution", "n, m in [-6,10], k in [0,10]", [] {
        Tally t;
        for (long n = -6; n <= 10; ++n)
            for (long m = -6; m <= 10; ++m)
                for (long k = 0; k <= 10; ++k)
                    t.expect(vandermonde_convolution(n, m, k) == binom(n + m, k), [&] {
                        return "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k);
                    });
        return t.finish("vandermonde_convolution", "n, m in [-6,10], k in [0,10]");
    }));
    const char* names[] = {"alternating_sum_plain", "alternating_sum_linear", "alternating_sum_quadratic"};
    for (int which = 0; which < 3; ++which) {
        out.push_back(guarded(names[which], "m in [-6,10], l in [0,10]", [&] {
            Tally t;
            for (long m = -6; m <= 10; ++m)
                for (long l = 0; l <= 10; ++l) {
                    const AltBinomSums s = alt_binom_sums(m, l);
                    const BigInt got = which == 0 ? s.s1 : which == 1 ? s.s2 : s.s3;
                    const BigInt want = which == 0   ? binom(m - 1, l)
                                        : which == 1 ? binom(m - 2, l - 1)
                                                     : BigInt(binom(m - 3, l - 2) - binom(m - 3, l - 1));
                    t.expect(got == want, [&] { return "m=" + std::to_string(m) + ", l=" + std::to_string(l); });
                }
            return t.finish(names[which], "m in [-6,10], l in [0,10]");
        }));
    }
    return out;
}

std::vector<Check> suite_ring(const VerifyOptions& o) {
    std::vector<Check> out;
    for (int g = o.genus_min; g <= o.genus_max; ++g) {
        const std::string cx = ctx_g(g);
        RingElement sum = RingElement::zero(g);
        for (int i = 0; i <= 2 * g; ++i) sum += pi(g, i);
        out.push_back(eq("projector_sum", cx, sum.str(), gamma(g, 1).str()));

        Tally orth;
        for (int i = 0; i <= 2 * g; ++i)
            for (int j = 0; j <= 2 * g; ++j) {
                const RingElement p = compose(pi(g, i), pi(g, j));
                orth.expect(i == j ? p == pi(g, i) : p.is_zero(),
                            [&] { return "i=" + std::to_string(i) + ", j=" + std::to_string(j); });
            }
        out.push_back(orth.finish("projector_orthogonality", cx));

        Vector e(static_cast<std::size_t>(2 * g + 1), Rational(0));
        e[static_cast<std::size_t>(2 * g - 1)] = 1;
        out.push_back(eq("log_gamma1_is_pi_2g-1", cx, to_string(log_gamma1(g).pi_coeffs()), to_string(e)));
        out.push_back(eq("unipotence", cx, pontryagin_power(gamma(g, 1) - gamma(g, 0), 2 * g + 1).str(), "0"));

        if (g > 4) continue;
        for (long n = -5; n <= 5; ++n) {
            Tally t;
            for (int i = 0; i <= 2 * g; ++i) {
                const RingElement p = pi(g, 2 * g - i);
                const RingElement want = Rational(ipow(n, static_cast<unsigned>(i))) * p;
                t.expect(compose(gamma(g, n), p) == want && compose(p, gamma(g, n)) == want,
                         [&] { return "i=" + std::to_string(i); });
            }
            out.push_back(t.finish("eigen_relation", cx + ", n=" + std::to_string(n)));
        }
        Tally pon, com;
        for (long n = -4; n <= 6; ++n)
            for (long m = -4; m <= 6; ++m) {
                auto where = [&] { return "n=" + std::to_string(n) + ", m=" + std::to_string(m); };
                pon.expect(pontryagin(gamma(g, n), gamma(g, m)) == gamma(g, n + m), where);
                com.expect(compose(gamma(g, n), gamma(g, m)) == gamma(g, n * m), where);
            }
        out.push_back(pon.finish("pontryagin_semigroup", cx + ", n, m in [-4,6]"));
        out.push_back(com.finish("composition_semigroup", cx + ", n, m in [-4,6]"));
        out.push_back(eq("negative_index_square", cx, compose(gamma(g, -1), gamma(g, -1)).str(), gamma(g, 1).str()));
        Tally tr;
        for (long n = -3; n <= 4; ++n)
            for (long m = -3; m <= 4; ++m)
                tr.expect(transpose(compose(gamma(g, n), gamma(g, m))) == compose(transpose(gamma(g, m)), transpose(gamma(g, n))) &&
                              transpose(transpose(gamma(g, n))) == gamma(g, n),
                          [&] { return "n=" + std::to_string(n) + ", m=" + std::to_string(m); });
        out.push_back(tr.finish("transpose_anti_automorphism", cx));
    }
    return out;
}

std::vector<Check> suite_graded(const VerifyOptions& o) {
    std::vector<Check> out;
    const auto aj = EquivalenceLevel::abel_jacobi();
    for (int g = std::max(3, o.genus_min); g <= o.genus_max; ++g) {
        const std::string cx = ctx_g(g);
        const CurveClass z = gross_schoen(g);
        Vector want(static_cast<std::size_t>(g + 1), Rational(0));
        for (int i = 2; i <= g + 1; ++i)
            want[static_cast<std::size_t>(i - 1)] = Rational(ipow(3, i) - 3 * ipow(2, i) + 3);
        out.push_back(eq("gross_schoen_weight_profile", cx, z.str(), CurveClass(g, want).str()));
        out.push_back(eq("gross_schoen_pi_2g-2", cx, apply_operator(pi(g, 2 * g - 2), z).str(), "0"));
        out.push_back(eq("gross_schoen_pi_2g-3", cx, apply_operator(pi(g, 2 * g - 3), z).str(),
                         apply_operator(pi(g, 2 * g - 3), Rational(3) * ceresa(g)).str()));
        out.push_back(eq("gross_schoen_abel_jacobi", cx, quotient(z, aj).str(), quotient(Rational(3) * ceresa(g), aj).str()));
    }
    for (int g = std::max(2, o.genus_min); g <= o.genus_max; ++g)
        for (int dim = 0; dim <= g - 1; ++dim) {
            std::mt19937 rng(static_cast<unsigned>(1000 * g + dim));
            std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
            std::map<int, Rational> comps;
            for (int w = dim; w <= dim + g; ++w) comps[w] = Rational(num(rng), den(rng));
            const GradedCycle a(g, dim, comps);
            std::vector<GradedCycle> orbit;
            for (long n = -4; n <= 4; ++n) orbit.push_back(push_forward(n, a));
            const std::size_t r = span_dim(orbit, aj);
            out.push_back(holds("abel_jacobi_rank_bound", ctx_g(g) + ", dim=" + std::to_string(dim), r <= 2, "rank " + std::to_string(r), "rank <= 2"));
        }
    for (int g = std::max(3, o.genus_min); g <= o.genus_max; ++g)
        for (int n = 1; n <= g - 1; ++n) {
            const WDecomposition w = decompose_w(g, n);
            const std::vector<int> ws = w.weights();
            const bool range_ok = !ws.empty() && ws.front() == 2 * (g - n) && ws.back() == 2 * g - n;
            out.push_back(holds("w_algebraic_dim_bound", ctx_g(g) + ", W_" + std::to_string(g - n),
                                range_ok && w.algebraic_dim_bound() <= static_cast<std::size_t>(n),
                                "dim " + std::to_string(w.algebraic_dim_bound()) + ", weights [" +
                                    std::to_string(ws.front()) + "," + std::to_string(ws.back()) + "]",
                                "dim <= " + std::to_string(n) + ", weights [" + std::to_string(2 * (g - n)) + "," +
                                    std::to_string(2 * g - n) + "]"));
        }
    for (int g = o.genus_min; g <= o.genus_max; ++g) {
        std::vector<long> samples;
        for (long k = 1; static_cast<int>(samples.size()) < g; ++k) {
            samples.push_back(k);
            if (static_cast<int>(samples.size()) < g) samples.push_back(-k);
        }
        const auto dec = decompose_by_pushforwards(unit_curve(g), samples);
        CurveClass sum = CurveClass::zero(g);
        for (const auto& c : dec.components) sum += c;
        out.push_back(eq("pushforward_decomposition", ctx_g(g), sum.str(), unit_curve(g).str()));
    }
    return out;
}

std::vector<Check> suite_gonal(const VerifyOptions& o) {
    std::vector<Check> out;
    for (int g = o.genus_min; g <= o.genus_max; ++g)
        for (int d = o.gonality_min; d <= o.gonality_max; ++d) {
            out.push_back(guarded("vanishing_weights", ctx_gd(g, d), [&] {
                const std::set<int> v = derive_vanishing(GonalContext(g, d));
                std::set<int> want{1};
                for (int i = d + 1; i <= g + 1; ++i) want.insert(i);
                return eq("vanishing_weights", ctx_gd(g, d), set_str(v), set_str(want));
            }));
            out.push_back(guarded("curve_algebraic_dim_bound", ctx_gd(g, d), [&] {
                const std::set<int> v = derive_vanishing(GonalContext(g, d));
                const std::size_t dim = static_cast<std::size_t>(g + 1) - v.size();
                return holds("curve_algebraic_dim_bound", ctx_gd(g, d), dim + 1 <= static_cast<std::size_t>(d),
                             "dim " + std::to_string(dim), "dim <= " + std::to_string(d - 1));
            }));
        }
    for (int d = o.gonality_min; d <= o.gonality_max; ++d) {
        const int gmax = std::max(o.genus_max, d + 1);
        for (int g = d; g <= gmax; ++g) {
            Tally t;
            for (long n = -3; n <= 3; ++n) {
                bool ok = true;
                try {
                    p_n_relation(GonalContext(g, d), n);
                } catch (const std::exception&) {
                    ok = false;
                }
                t.expect(ok, [&] { return "n=" + std::to_string(n); });
            }
            out.push_back(t.finish("p_n_relation", ctx_gd(g, d) + ", n in [-3,3]"));
        }
        Tally diff;
        for (long n = -3; n <= 3; ++n) {
            GammaCombination want;
            for (long k = 0; k <= d + 1; ++k) {
                const Rational c(binom(d + 1, k));
                want.add(n + 1 - k, k % 2 == 0 ? c : -c);
            }
            diff.expect(same_terms(p_n_relation_combination(d, n) - p_n_relation_combination(d, n - 1), want),
                        [&] { return "n=" + std::to_string(n); });
        }
        out.push_back(diff.finish("p_n_difference", "d=" + std::to_string(d)));

        const int g = d + 2;
        const RingElement gen = pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(d + 1));
        Tally ann;
        for (long m = -4; m <= 4; ++m)
            ann.expect(quotient(apply_operator(pontryagin(gamma(g, m), gen), unit_curve(g)), EquivalenceLevel::algebraic(d)).is_zero(),
                       [&] { return "m=" + std::to_string(m); });
        out.push_back(ann.finish("ideal_annihilates_low_weights", ctx_gd(g, d)));
    }

    if (o.gonality_min <= 3 && 3 <= o.gonality_max) {
        const GonalContext ctx(std::max(3, o.genus_max), 3);
        const ClosedForms t = closed_forms(ctx);
        out.push_back(eq("trigonal_closed_forms", ctx_gd(ctx.genus(), 3),
                         to_string(t.components.at(2)) + " " + to_string(t.components.at(3)), "(1/2, 1/2) (1/2, -1/2)"));
        for (long n = -5; n <= 5; ++n)
            out.push_back(eq("trigonal_pushforward", ctx_gd(ctx.genus(), 3) + ", n=" + std::to_string(n),
                             to_string(express_nstar(ctx, n, {1, -1})),
                             to_string(Vector{Rational(n * n * n + n * n, 2), Rational(n * n - n * n * n, 2)})));
    }
    if (o.gonality_min <= 4 && 4 <= o.gonality_max) {
        const GonalContext ctx(std::max(4, o.genus_max), 4);
        const ClosedForms t = closed_forms(ctx);
        out.push_back(eq("tetragonal_closed_forms", ctx_gd(ctx.genus(), 4),
                         to_string(t.components.at(2)) + " " + to_string(t.components.at(3)) + " " +
                             to_string(t.components.at(4)),
                         "(1, 1/3, -1/12) (1/2, -1/2, 0) (-1/2, 1/6, 1/12)"));
    }
    for (int d = std::max(3, o.gonality_min); d <= std::min(5, o.gonality_max); ++d) {
        const int g = std::max(d, o.genus_max);
        const PiCombinationResult r = pi_combination(GonalContext(g, d));
        out.push_back(holds("projector_congruence", ctx_gd(g, d), r.verified,
                            "L == log Gamma_1 + (" + r.c.str() + ")Gamma_0 == sum + (" + r.c1.str() + ")Gamma_0: " +
                                (r.verified ? "both hold" : "residual " + r.residual_log.str() + " / " + r.residual_sum.str()),
                            "both hold mod (Gamma_1-Gamma_0)^{*" + std::to_string(d + 1) + "}"));
        out.push_back(holds("weight_one_vanishing", ctx_gd(g, d), r.kills_weight_one,
                            "weight-1 action " + r.weight_one_action.str(), "weight-1 action 1, weights 2..d killed"));
    }
    for (int d = std::max(3, o.gonality_min); d <= o.gonality_max; ++d)
        for (int n = 1; n <= d - 1; ++n) {
            out.push_back(eq("g_n_recursion", ctx_dn(d, n), recursive_g_n_combination(d, n).str("C"), g_n_combination(d, n).str("C")));
            out.push_back(eq("g_n_homology_degree", ctx_dn(d, n), g_n_combination(d, n).weight_scalar(2).str(),
                             binom(d - 2, n - 1).get_str()));
        }
    return out;
}

std::vector<Check> suite_surfaces(const VerifyOptions& o) {
    std::vector<Check> out;
    for (int d = std::max(3, o.gonality_min); d <= o.gonality_max; ++d)
        for (int n = 1; n <= d - 1; ++n) {
            const std::string cx = ctx_dn(d, n);
            out.push_back(guarded("h_n_relation", cx, [&] {
                std::string got;
                for (int g = o.genus_min; g <= o.genus_max; ++g) {
                    const NSRelation r = solve_hn(SurfaceContext(g, d, n));
                    got = triple(r.a, r.b, r.c);
                }
                return eq("h_n_relation", cx + ", g in [" + std::to_string(o.genus_min) + "," + std::to_string(o.genus_max) + "]",
                          got, triple(Rational(binom(d, n)), d, -1));
            }));
            out.push_back(guarded("g_n_theta_degree", cx, [&] {
                Tally t;
                std::string last;
                for (int g = o.genus_min; g <= o.genus_max; ++g) {
                    const TwoRoute r = gn_theta_degree(SurfaceContext(g, d, n));
                    t.expect(r.route_a == r.route_b && r.route_b == Rational(g) * Rational(binom(d - 2, n - 1)),
                             [&] { return ctx_g(g); });
                }
                return t.finish("g_n_theta_degree", cx);
            }));
            out.push_back(guarded("delta_homology", cx, [&] {
                const DeltaHomology h = delta_homology_coeff(SurfaceContext(o.genus_max, d, n));
                return holds("delta_homology", cx + ", consistent variant: " + to_string(h.consistent),
                             h.sum_route == h.chain_route && h.consistent != DeltaVariant::neither,
                             "sum " + h.sum_route.str() + ", chain " + h.chain_route.str(),
                             "equation variant " + h.equation_variant.str() + ", display variant " + h.display_variant.str());
            }));
        }
    return out;
}

std::vector<Check> suite_dsl(const VerifyOptions&) {
    std::vector<Check> out;
    for (const auto& row : identity_table()) {
        std::string cx = ctx_g(row.genus) + ", " + row.level;
        if (row.gonality) cx += ", d=" + std::to_string(*row.gonality);
        out.push_back(guarded(row.name, cx, [&] {
            const auto ctx = dsl::EvalContext::make(row.genus, row.gonality, row.level);
            return eq(row.name, cx + ": " + row.expr, dsl::render(dsl::evaluate(row.expr, ctx)), row.expected);
        }));
    }
    return out;
}

}  // namespace

const std::vector<IdentityRow>& identity_table() {
    static const std::vector<IdentityRow> rows{
        {"dsl_gross_schoen", "(gamma(1)-gamma(0))**3 @ C", 4, std::nullopt, "chow", "6*C_(3) + 36*C_(4) + 150*C_(5)"},
        {"dsl_pi_2g-2_of_C", "pi(2*g-2) @ C", 4, std::nullopt, "chow", "C_(2)"},
        {"dsl_gross_schoen_trigonal", "gs", 3, 3, "alg", "6*C_(3)"},
        {"dsl_gross_schoen_abel_jacobi", "gs - 3*ceresa", 5, std::nullopt, "aj", "0"},
        {"dsl_gross_schoen_homological", "gs", 5, std::nullopt, "hom", "0"},
        {"dsl_unipotence", "(gamma(1)-gamma(0))**(2*g+1)", 3, std::nullopt, "chow", "0"},
        {"dsl_log_is_projector", "log1 - pi(2*g-1)", 4, std::nullopt, "chow", "0"},
        {"dsl_pontryagin_semigroup", "gamma(2) * gamma(-3) - gamma(-1)", 3, std::nullopt, "chow", "0"},
        {"dsl_composition_semigroup", "gamma(-2) . gamma(3) - gamma(-6)", 2, std::nullopt, "chow", "0"},
        {"dsl_projector_sum", "pi(0) + pi(1) + pi(2) + pi(3) + pi(4) - gamma(1)", 2, std::nullopt, "chow", "0"},
        {"dsl_hyperelliptic", "C - Cminus", 4, 2, "alg", "0"},
        {"dsl_trigonal_push", "push(2, C) - 6*C + 2*Cminus", 5, 3, "alg", "0"},
        {"dsl_ceresa_weights", "ceresa", 4, std::nullopt, "chow", "2*C_(3) + 2*C_(5)"},
        {"dsl_eigen_action", "gamma(3) . pi(2*g-2) - 9*pi(2*g-2)", 3, std::nullopt, "chow", "0"},
        {"dsl_theta_term", "pi(2) @ W(3)", 4, std::nullopt, "chow", "weight 6: 1/6*C_(2)^3   [= Theta^1/1!]"},
        {"dsl_w_top_term", "pi(2*g-5) @ W(2)", 3, std::nullopt, "chow", "weight 5: C_(2)*C_(3)"},
    };
    return rows;
}

Report verify_all(const VerifyOptions& opts) {
    Report report;
    report.genus_range = {opts.genus_min, opts.genus_max};
    report.gonality_range = {opts.gonality_min, opts.gonality_max};
    const std::vector<Suite> suites{suite_qbinom, suite_ring, suite_graded, suite_gonal, suite_surfaces, suite_dsl};
    std::vector<std::vector<Check>> results(suites.size());
    if (opts.parallel) {
        std::vector<std::future<std::vector<Check>>> futures;
        for (const auto& s : suites) futures.push_back(std::async(std::launch::async, s, std::cref(opts)));
        for (std::size_t k = 0; k < futures.size(); ++k) results[k] = futures[k].get();
    } else {
        for (std::size_t k = 0; k < suites.size(); ++k) results[k] = suites[k](opts);
    }
    for (auto& r : results) report.checks.insert(report.checks.end(), r.begin(), r.end());
    if (opts.inject_fault) report.checks.push_back({"injected_fault", false, "1", "0", "harness self-test"});
    return report;
}

}  // namespace cyclecalc
