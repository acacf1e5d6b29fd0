#pragma once

/**
 * Relations among the n_*C on a curve with a g^1_d.
 *
 * Everything here is expressed through GammaCombination (formal sums of
 * push-forwards) and then evaluated on the graded model. The key objects:
 *
 *  - P_n = sum_{k=0}^{d} (-1)^k binom(d,k) Gamma_{n+1-k} and the fixed cycle F_d
 *    with P_n C + F_d ~alg 0 for every n;
 *  - the push-forwards u_{n*}G_n of the curves of divisors contained in the pencil,
 *    in closed form and via the recursion through the surfaces G_n x C;
 *  - the congruence in M that isolates log Gamma_1 and forces C_(1) ~alg 0.
 */

#include <set>
#include <string>
#include <vector>

#include "cyclecalc/graded.hpp"
#include "cyclecalc/ring.hpp"

namespace cyclecalc {

class GonalContext {
public:
    GonalContext(int genus, int gonality);

    int genus() const { return genus_; }
    int gonality() const { return gonality_; }
    EquivalenceLevel level() const { return EquivalenceLevel::algebraic(gonality_); }
    /// Every genus-g curve has a g^1_d with d <= (g+3)/2; larger d is allowed
    /// but flagged.
    bool exceeds_gonality_bound() const { return 2 * gonality_ > genus_ + 3; }
    std::string warning() const;

private:
    int genus_;
    int gonality_;
};

struct Relation {
    CurveClass cycle;        ///< asserted ~alg 0
    std::string provenance;
};

/// Weights i in [1, g+1] with C_(i) ~alg 0, computed from the row space of
/// the relations Gamma_m * (Gamma_1 - Gamma_0)^{*(d+1)} C (all m), plus weight 1.
std::set<int> derive_vanishing(const GonalContext& ctx);

/// Gamma-part of P_n.
GammaCombination p_n_operator(int gonality, long n);
/// F_d = d [ -C + sum_{k=1}^{d-2} (-1)^(k+1) (1/k) binom(d-1, d-2-k) k_*C^- ]
/// written as a combination of push-forwards of C (k_*C^- = (-k)_*C).
GammaCombination f_d_combination(int gonality);
/// P_n + F_d: the full left-hand side of the relation, as push-forwards of C.
GammaCombination p_n_relation_combination(int gonality, long n);
/// Builds P_n C + F_d and checks that it vanishes in the algebraic(d) quotient.
Relation p_n_relation(const GonalContext& ctx, long n);

/// sum_{k=1}^{n} (-1)^(k-1) (1/k) binom(d, n-k) k_*C.  n = d is accepted as
/// the formal extension (G_d is a rational curve).
GammaCombination g_n_combination(int gonality, int n);
CurveClass g_n_pushforward(const GonalContext& ctx, int n);

/// (Phi^k_{1,l})_* H_k as push-forwards of C, expanded through
/// H_k = binom(d,k) C + d G_k - Delta_k and (Phi^k_{1,l})_* Delta_k = (Phi^{k-1}_{1,l+1})_* H_{k-1}.
/// The G_k inside are taken from the recursion itself.
GammaCombination pencil_chain(int gonality, int k, long l);
/// G_n from G_n = (1/n)(binom(d,n-1) C + d G_{n-1} - (Phi^{n-1}_{1,1})_* Delta_{n-1}).
GammaCombination recursive_g_n_combination(int gonality, int n);
/// Runs the recursion and checks it against the closed form exactly.
CurveClass recursive_gn(const GonalContext& ctx, int n);

struct PiCombinationResult {
    RingElement lhs;             ///< Gamma_{-1} o ((1/(d-1)) P~_0 - (1/d) P~_{-1})
    Rational c;                  ///< lhs == c Gamma_0 + log Gamma_1 mod the ideal
    Rational c1;                 ///< lhs == sum (-1)^(n-1)/n binom(d,n) Gamma_n + c1 Gamma_0
    bool log_congruence = false;
    bool sum_congruence = false;
    bool verified = false;
    RingElement residual_log;    ///< reduce(lhs - log Gamma_1 - c Gamma_0)
    RingElement residual_sum;
    Rational weight_one_action;  ///< coordinate of lhs on pi_{2g-1}
    bool kills_weight_one = false;  ///< acts as 1 on weight 1 and as 0 on weights 2..d
    /// Same computation with the bare Gamma-part P_n (no F_d); recorded for
    /// comparison, it does not satisfy the congruence.
    bool bare_operator_congruence = false;
    RingElement bare_residual;
};

/// P~_n = P_n + F_d lifted to a correspondence. Requires d >= 3 and 2g >= d.
PiCombinationResult pi_combination(const GonalContext& ctx);

struct ClosedForms {
    std::vector<long> generators;           ///< push-forward indices, e.g. {1, -1, 2}
    std::vector<std::string> labels;        ///< "C", "C^-", "2_*C"
    std::map<int, Vector> components;       ///< weight i -> coefficients on generators
    std::string str() const;
};

/// C_(i) ~alg sum_j x_ij (n_j)_*C for i = 2..d, solved from the Vandermonde
/// system over `basis` (d-1 distinct nonzero integers). Needs g >= d-1.
ClosedForms express_components(const GonalContext& ctx, const std::vector<long>& basis);
/// d = 3: basis {C, C^-}; d = 4: basis {C, C^-, 2_*C}.
ClosedForms closed_forms(const GonalContext& ctx);
/// Coefficients of n_*C on the basis {n_j*C} in the algebraic(d) quotient.
Vector express_nstar(const GonalContext& ctx, long n, const std::vector<long>& basis);
/// 1, -1, 2, -2, ... (the first d-1 of them).
std::vector<long> default_basis(int gonality);

}  // namespace cyclecalc
