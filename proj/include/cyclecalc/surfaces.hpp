#pragma once

/**
 * Intersection numbers and homology degrees on S_n = G_n x C, and the
 * exact solve for H_n in the Neron-Severi lattice <C, G_n, Delta_n>.
 *
 * NS(S_n) is taken to have rank 3; nothing here computes Neron-Severi ranks.
 * Homology classes of curves in J(C) are multiples of [C], normalized by
 * [B] = (1/g) Theta.B.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cyclecalc/exact_linalg.hpp"
#include "cyclecalc/rational.hpp"

namespace cyclecalc {

class SurfaceContext {
public:
    /// 1 <= n <= d-1, d >= 2, g >= 1.
    SurfaceContext(int genus, int gonality, int index);
    int genus() const { return genus_; }
    int gonality() const { return gonality_; }
    int index() const { return index_; }

private:
    int genus_;
    int gonality_;
    int index_;
};

enum class SurfaceCurve { C, G, Delta, H };
std::string to_string(SurfaceCurve c);

class IntersectionTable {
public:
    std::optional<BigInt> at(SurfaceCurve a, SurfaceCurve b) const;
    const std::map<std::pair<SurfaceCurve, SurfaceCurve>, BigInt>& entries() const { return entries_; }
    void set(SurfaceCurve a, SurfaceCurve b, BigInt v);

private:
    std::map<std::pair<SurfaceCurve, SurfaceCurve>, BigInt> entries_;  // keyed with a <= b
};

/// C.C = G.G = 0, C.G = 1, C.Delta = n, G.Delta = binom(d-1,n-1), H.C = d-n,
/// H.G = binom(d-1,n); for n = 1 also H.Delta = 2(g+d-1) and Delta.Delta = 2-2g.
IntersectionTable intersection_table(const SurfaceContext& ctx);

struct TwoRoute {
    Rational route_a;
    Rational route_b;
};

/// G_n . Theta: route A sums the class of G_n in C^(n) against theta,
/// route B is g binom(d-2, n-1). Throws IdentityViolation on disagreement.
TwoRoute gn_theta_degree(const SurfaceContext& ctx);

enum class DeltaVariant { display, equation, both, neither };
std::string to_string(DeltaVariant v);

/// Homology degree of (Phi^n_{1,1})_* Delta_n, as a multiple of [C].
struct DeltaHomology {
    Rational sum_route;         ///< d sum (-1)^(k-1) k binom(d-1,n-1-k) + sum (-1)^k k^2 binom(d,n+1-k)
    Rational chain_route;       ///< weight-2 scalar of the pencil chain expansion
    Rational display_variant;   ///< d binom(d-2,n-2) - (n+1) binom(d-2,n) + binom(d,n)
    Rational equation_variant;  ///< d binom(d-2,n-1) - (n+1) binom(d-2,n) + binom(d,n)
    DeltaVariant consistent = DeltaVariant::neither;  ///< which closed form equals sum_route
};

/// Throws IdentityViolation if the sum and chain routes disagree or if no
/// closed form matches them.
DeltaHomology delta_homology_coeff(const SurfaceContext& ctx);

struct NSRelation {
    Rational a, b, c;  ///< H_n = a C + b G_n + c Delta_n
    Matrix system;     ///< rows: homology, .C, .G_n
    Vector rhs;
    Rational delta_coefficient;  ///< the [Delta_n] entry used in the homology row
};

/// Solves the homology equation and the two intersection equations with a
/// given [(Phi^n_{1,1})_* Delta_n] coefficient; no check on the result.
NSRelation solve_hn_with(const SurfaceContext& ctx, const Rational& delta_coefficient);
/// Uses the sum-route coefficient and checks (a, b, c) = (binom(d,n), d, -1).
NSRelation solve_hn(const SurfaceContext& ctx);

}  // namespace cyclecalc
