#pragma once

/**
 * Weight-graded model of tautological cycles on a Jacobian.
 *
 * A d-cycle alpha splits as a sum of weight components alpha_(i) = pi_{2g-i} alpha
 * on which n_* acts by n^i. The generators are formal and independent (the
 * generic-curve model); relations only enter through an EquivalenceLevel.
 *
 * CurveClass is the d = 1 case for the image of the curve itself:
 * C = C_(2) + ... + C_(g+1), weight 1 being identically zero.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclecalc/rational.hpp"
#include "cyclecalc/ring.hpp"

namespace cyclecalc {

class EquivalenceLevel {
public:
    enum class Kind { chow, homological, abel_jacobi, algebraic };

    static EquivalenceLevel chow() { return EquivalenceLevel(Kind::chow, 0); }
    static EquivalenceLevel homological() { return EquivalenceLevel(Kind::homological, 0); }
    static EquivalenceLevel abel_jacobi() { return EquivalenceLevel(Kind::abel_jacobi, 0); }
    /// Algebraic equivalence on a curve with a g^1_d; requires d >= 2.
    static EquivalenceLevel algebraic(int gonality);
    /// "chow" | "hom" | "aj" | "alg"; alg needs a gonality.
    static EquivalenceLevel parse(const std::string& name, std::optional<int> gonality);

    Kind kind() const { return kind_; }
    int gonality() const { return gonality_; }
    std::string name() const;

    friend bool operator==(const EquivalenceLevel&, const EquivalenceLevel&) = default;

private:
    EquivalenceLevel(Kind k, int d) : kind_(k), gonality_(d) {}
    Kind kind_;
    int gonality_;
};

/// sum_{i=1}^{g+1} c_i C_(i) with c_1 pinned to zero.
class CurveClass {
public:
    /// coeffs[w-1] is the coefficient of C_(w); length must be g+1 and
    /// coeffs[0] must be zero.
    CurveClass(int genus, Vector coeffs);
    static CurveClass zero(int genus);
    /// The single generator C_(weight).
    static CurveClass generator(int genus, int weight);

    int genus() const { return genus_; }
    int max_weight() const { return genus_ + 1; }
    const Rational& coeff(int weight) const;
    const Vector& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CurveClass& operator+=(const CurveClass& o);
    CurveClass& operator-=(const CurveClass& o);
    CurveClass& operator*=(const Rational& s);
    friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
    friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
    friend CurveClass operator*(const Rational& s, CurveClass a) { return a *= s; }
    CurveClass operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;

    /// "6*C_(3) + 36*C_(4)"; "0" for the zero class.
    std::string str() const;

private:
    int genus_;
    Vector coeffs_;
};

/// A d'-cycle on a g-dimensional abelian variety, by weight. Support lies in
/// [d', d'+g].
class GradedCycle {
public:
    GradedCycle(int genus, int dimension, std::map<int, Rational> components);
    static GradedCycle from_curve(const CurveClass& cc);

    int genus() const { return genus_; }
    int dimension() const { return dimension_; }
    Rational coeff(int weight) const;
    const std::map<int, Rational>& components() const { return components_; }
    int min_weight() const { return dimension_; }
    int max_weight() const { return dimension_ + genus_; }

    friend bool operator==(const GradedCycle&, const GradedCycle&) = default;
    std::string str() const;

private:
    int genus_;
    int dimension_;
    std::map<int, Rational> components_;  // zeros dropped
};

CurveClass unit_curve(int genus);
CurveClass push_forward(long n, const CurveClass& cc);
GradedCycle push_forward(long n, const GradedCycle& alpha);
/// Acts on weight i by the coordinate of `op` on pi_{2g-i}.
CurveClass apply_operator(const RingElement& op, const CurveClass& cc);
GradedCycle apply_operator(const RingElement& op, const GradedCycle& alpha);
/// sum_n a_n n_* cc, without going through a ring of fixed genus.
CurveClass apply_combination(const GammaCombination& comb, const CurveClass& cc);

CurveClass quotient(const CurveClass& cc, const EquivalenceLevel& level);
/// The algebraic level is only defined here for dimension-1 cycles.
GradedCycle quotient(const GradedCycle& alpha, const EquivalenceLevel& level);

struct PushforwardDecomposition {
    std::vector<int> weights;            ///< the weights solved for
    std::vector<long> samples;           ///< the push-forward indices used
    Matrix combination;                  ///< row r: C_(weights[r]) = sum_j combination[r][j] samples[j]_* cc
    std::vector<CurveClass> components;  ///< one per weight
};

/// Recovers each weight component of `cc` as an exact combination of the
/// push-forwards n_* cc, n in `samples` (a Vandermonde solve over the
/// support of cc).
PushforwardDecomposition decompose_by_pushforwards(const CurveClass& cc, const std::vector<long>& samples);

std::size_t span_dim(const std::vector<CurveClass>& classes, const EquivalenceLevel& level);
std::size_t span_dim(const std::vector<GradedCycle>& cycles, const EquivalenceLevel& level);

/// Commutative monomial in C_(2)..C_(g+1); exps[k] is the exponent of C_(k+2).
struct Monomial {
    std::vector<int> exps;
    int degree() const;
    int weight() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    std::string str() const;
};
using Multinomial = std::map<Monomial, Rational>;
std::string to_string(const Multinomial& p);

struct DiscardedWeight {
    int weight;
    Multinomial terms;
    std::string reason;
};

/// Weight decomposition of W_{g-d} = (1/(g-d)!) C^{*(g-d)}.
struct WDecomposition {
    int genus;
    int codim;  ///< d
    int index;  ///< m = g - d, the cycle dimension
    std::map<int, Multinomial> terms;  ///< surviving weights, in [2m, 2g-d]
    std::vector<DiscardedWeight> discarded;
    int theta_weight;  ///< 2m; its term is labelled theta_label
    std::string theta_label;

    std::vector<int> weights() const;
    int top_weight() const;
    /// Surviving weights minus the algebraically trivial top one.
    std::size_t algebraic_dim_bound() const;
    /// Keeps the given weight only (the action of pi_{2g-weight}).
    WDecomposition project(int weight) const;
    std::string str() const;
};

WDecomposition decompose_w(int genus, int codim);
WDecomposition apply_operator(const RingElement& op, const WDecomposition& w);
WDecomposition quotient(const WDecomposition& w, const EquivalenceLevel& level);

/// (Gamma_1 - Gamma_0)^{*3} applied to C, i.e. 3_*C - 3 2_*C + 3C.
CurveClass gross_schoen(int genus);
/// C - C^-.
CurveClass ceresa(int genus);

}  // namespace cyclecalc
