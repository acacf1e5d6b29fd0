#include "doctest.h"

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/errors.hpp"
#include "cyclecalc/gonal.hpp"

using namespace cyclecalc;

namespace {

// (d+1)-th forward difference of n -> n^i at m
BigInt forward_difference(int order, long m, int i) {
    BigInt s = 0;
    for (int k = 0; k <= order; ++k) {
        const BigInt t = binom(order, k) * ipow(m + k, static_cast<unsigned>(i));
        s += ((order - k) % 2 == 0) ? t : BigInt(-t);
    }
    return s;
}

std::set<int> vanishing_oracle(int g, int d) {
    std::set<int> out{1};
    for (int i = 2; i <= g + 1; ++i) {
        bool all_zero = true;
        for (long m = -6; m <= 6; ++m) all_zero = all_zero && forward_difference(d + 1, m, i) == 0;
        if (!all_zero) out.insert(i);
    }
    return out;
}

}  // namespace

TEST_CASE("gonal context") {
    CHECK_FALSE(GonalContext(5, 4).exceeds_gonality_bound());
    CHECK(GonalContext(5, 5).exceeds_gonality_bound());
    CHECK_FALSE(GonalContext(5, 5).warning().empty());
    CHECK(GonalContext(5, 4).warning().empty());
    CHECK_THROWS_AS(GonalContext(3, 1), DomainError);
    CHECK_THROWS_AS(GonalContext(0, 3), DomainError);
}

TEST_CASE("derive_vanishing examples") {
    CHECK(derive_vanishing(GonalContext(5, 3)) == std::set<int>{1, 4, 5, 6});
    CHECK(derive_vanishing(GonalContext(3, 2)) == std::set<int>{1, 3, 4});
    for (int g = 1; g <= 5; ++g)
        for (int d = g + 1; d <= g + 3; ++d) CHECK(derive_vanishing(GonalContext(g, d)) == std::set<int>{1});
}

TEST_CASE("derive_vanishing against finite differences") {
    for (int g = 1; g <= 7; ++g)
        for (int d = 2; d <= 7; ++d) {
            const std::set<int> v = derive_vanishing(GonalContext(g, d));
            CHECK(v == vanishing_oracle(g, d));
            std::set<int> expect{1};
            for (int i = d + 1; i <= g + 1; ++i) expect.insert(i);
            CHECK(v == expect);
            // dim Z_C/alg <= d-1
            CHECK(static_cast<int>(g + 1 - v.size()) <= d - 1);
        }
}

TEST_CASE("P_n relation examples") {
    const Relation r = p_n_relation(GonalContext(4, 3), 1);
    CHECK(r.cycle.coeff(2) == 0);
    CHECK(r.cycle.coeff(3) == 0);
    CHECK_FALSE(r.provenance.empty());
    const CurveClass c = unit_curve(4);
    CHECK(quotient(c - push_forward(-1, c), EquivalenceLevel::algebraic(2)).is_zero());
    // F_d acts on weight one by d(1-d)
    for (int d = 2; d <= 7; ++d) CHECK(f_d_combination(d).weight_scalar(1) == Rational(d * (1 - d)));
    CHECK(f_d_combination(3) == GammaCombination::single(1, -3) + GammaCombination::single(-1, 3));
}

TEST_CASE("P_n relations hold in the algebraic quotient") {
    for (int d = 2; d <= 7; ++d)
        for (int g = d; g <= 8; ++g)
            for (long n = -3; n <= 3; ++n) CHECK_NOTHROW(p_n_relation(GonalContext(g, d), n));
}

TEST_CASE("P_n - P_{n-1} has the d+1 alternating coefficients") {
    for (int d = 2; d <= 6; ++d)
        for (long n = -3; n <= 3; ++n) {
            GammaCombination expect;
            for (long k = 0; k <= d + 1; ++k) {
                const Rational c(binom(d + 1, k));
                expect.add(n + 1 - k, k % 2 == 0 ? c : -c);
            }
            CHECK(p_n_relation_combination(d, n) - p_n_relation_combination(d, n - 1) == expect);
            const int g = d + 2;
            CHECK(apply_combination(expect, unit_curve(g)) == apply_operator(pontryagin(gamma(g, n - d), pontryagin_power(gamma(g, 1) - gamma(g, 0), d + 1)), unit_curve(g)));
        }
}

TEST_CASE("ideal generator annihilates low weights") {
    for (int d = 2; d <= 6; ++d) {
        const int g = d + 2;
        const RingElement gen = pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(d + 1));
        for (long m = -4; m <= 4; ++m) {
            const CurveClass img = apply_operator(pontryagin(gamma(g, m), gen), unit_curve(g));
            CHECK(quotient(img, EquivalenceLevel::algebraic(d)).is_zero());
        }
    }
}

TEST_CASE("G_n push forward") {
    const GonalContext ctx(5, 3);
    CHECK(g_n_combination(3, 2) == GammaCombination::single(1, 3) + GammaCombination::single(2, Rational(-1, 2)));
    CHECK(g_n_pushforward(ctx, 2) == quotient(Rational(3) * unit_curve(5) - Rational(1, 2) * push_forward(2, unit_curve(5)), ctx.level()));
    for (int d = 3; d <= 10; ++d)
        for (int n = 1; n <= d - 1; ++n) {
            const GammaCombination comb = g_n_combination(d, n);
            CHECK(comb.weight_scalar(2) == Rational(binom(d - 2, n - 1)));
            Rational via_sums(0);
            for (long k = 1; k <= n; ++k) via_sums += Rational(k % 2 == 1 ? k : -k) * Rational(binom(d, n - k));
            CHECK(via_sums == Rational(alt_binom_sums(d, n).s2));
        }
    for (int d = 2; d <= 6; ++d) {
        const GonalContext c(d + 1, d);
        CHECK(g_n_pushforward(c, d).is_zero());
    }
    CHECK_THROWS_AS(g_n_combination(3, 0), DomainError);
    CHECK_THROWS_AS(g_n_combination(3, 4), DomainError);
}

TEST_CASE("recursion reproduces the closed form") {
    CHECK(recursive_gn(GonalContext(5, 4), 2) == g_n_pushforward(GonalContext(5, 4), 2));
    CHECK(recursive_gn(GonalContext(6, 5), 3) == g_n_pushforward(GonalContext(6, 5), 3));
    CHECK(recursive_g_n_combination(6, 1) == GammaCombination::single(1));
    for (int d = 3; d <= 8; ++d)
        for (int n = 1; n <= d - 1; ++n) {
            CHECK(recursive_g_n_combination(d, n) == g_n_combination(d, n));
            CHECK_NOTHROW(recursive_gn(GonalContext(d, d), n));
        }
}

TEST_CASE("pencil chain hand expansion") {
    // d=4: (Phi^1_{1,2})_* H_1 = 4*2_*C + 4C - 3_*C
    CHECK(pencil_chain(4, 1, 2) == GammaCombination::single(2, 4) + GammaCombination::single(1, 4) + GammaCombination::single(3, -1));
    CHECK(pencil_chain(4, 0, 5) == GammaCombination::single(5));
    CHECK_THROWS_AS(pencil_chain(4, 4, 1), DomainError);
}

TEST_CASE("projector congruence") {
    for (int d = 3; d <= 5; ++d)
        for (int g = (d + 1) / 2; g <= 6; ++g) {
            const PiCombinationResult r = pi_combination(GonalContext(g, d));
            CHECK(r.log_congruence);
            CHECK(r.sum_congruence);
            CHECK(r.verified);
            CHECK(r.residual_log.is_zero());
            CHECK(r.residual_sum.is_zero());
            CHECK(r.weight_one_action == 1);
            CHECK(r.kills_weight_one);
            Rational harmonic(0);
            for (long k = 1; k <= d; ++k) harmonic += Rational(1, k);
            CHECK(r.c - r.c1 == harmonic);
            CHECK_FALSE(r.bare_operator_congruence);
        }
    CHECK_THROWS_AS(pi_combination(GonalContext(4, 2)), DomainError);
}

TEST_CASE("projector constants do not depend on the genus") {
    for (int d = 3; d <= 5; ++d) {
        const PiCombinationResult base = pi_combination(GonalContext(d, d));
        for (int g = d + 1; g <= 6; ++g) {
            const PiCombinationResult r = pi_combination(GonalContext(g, d));
            CHECK(r.c == base.c);
            CHECK(r.c1 == base.c1);
        }
    }
}

TEST_CASE("closed forms") {
    const ClosedForms t = closed_forms(GonalContext(4, 3));
    CHECK(t.generators == std::vector<long>{1, -1});
    CHECK(t.components.at(2) == Vector{Rational(1, 2), Rational(1, 2)});
    CHECK(t.components.at(3) == Vector{Rational(1, 2), Rational(-1, 2)});
    CHECK(t.str() == "C_(2) ~alg 1/2*C + 1/2*C^-\nC_(3) ~alg 1/2*C - 1/2*C^-");

    const ClosedForms q = closed_forms(GonalContext(5, 4));
    CHECK(q.generators == std::vector<long>{1, -1, 2});
    CHECK(q.components.at(2) == Vector{1, Rational(1, 3), Rational(-1, 12)});
    CHECK(q.components.at(3) == Vector{Rational(1, 2), Rational(-1, 2), 0});
    CHECK(q.components.at(4) == Vector{Rational(-1, 2), Rational(1, 6), Rational(1, 12)});
    CHECK_THROWS_AS(closed_forms(GonalContext(5, 5)), DomainError);
    CHECK_THROWS_AS(closed_forms(GonalContext(2, 4)), DomainError);
}

TEST_CASE("trigonal n_*C formula") {
    const GonalContext ctx(4, 3);
    for (long n = -5; n <= 5; ++n) {
        const Vector x = express_nstar(ctx, n, {1, -1});
        CHECK(x == Vector{Rational(n * n * n + n * n, 2), Rational(-(n * n * n - n * n), 2)});
    }
    CHECK(express_nstar(ctx, 2, {1, -1}) == Vector{6, -2});
    CHECK(express_nstar(ctx, 1, {1, -1}) == Vector{1, 0});
}

TEST_CASE("tetragonal n_*C by substitution") {
    const GonalContext ctx(5, 4);
    const std::vector<long> basis{1, -1, 2};
    for (long n = -5; n <= 5; ++n) {
        const Vector x = express_nstar(ctx, n, basis);
        for (int w = 2; w <= 4; ++w) {
            Rational s(0);
            for (std::size_t j = 0; j < basis.size(); ++j) s += x[j] * Rational(ipow(basis[j], static_cast<unsigned>(w)));
            CHECK(s == Rational(ipow(n, static_cast<unsigned>(w))));
        }
    }
    CHECK_THROWS_AS(express_nstar(ctx, 3, {1, 1, 2}), DomainError);
    CHECK_THROWS_AS(express_nstar(ctx, 3, {1, 2}), DomainError);
}

TEST_CASE("pushforwards span the algebraic quotient") {
    for (int d = 2; d <= 7; ++d)
        for (int g = d; g <= 8; ++g) {
            const std::vector<long> basis = default_basis(d);
            std::vector<CurveClass> v;
            for (long n : basis) v.push_back(push_forward(n, unit_curve(g)));
            CHECK(span_dim(v, EquivalenceLevel::algebraic(d)) == static_cast<std::size_t>(d - 1));
            CHECK_NOTHROW(express_components(GonalContext(g, d), basis));
        }
}
