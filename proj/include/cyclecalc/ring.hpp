#pragma once

/**
 * The ring M spanned by the graphs Gamma_n of multiplication by n on a
 * g-dimensional abelian variety.
 *
 * M is isomorphic to Q[X]/(X-1)^(2g+1) with X^n <-> Gamma_n. Two products
 * live on it:
 *
 *  - the relative Pontryagin product `*`, which is polynomial multiplication
 *    (Gamma_n * Gamma_m = Gamma_{n+m});
 *  - composition of correspondences `o`, which is diagonal in the projector
 *    basis pi_0..pi_{2g} (Gamma_n o Gamma_m = Gamma_{nm}).
 *
 * An element is stored on the shifted-power basis (X-1)^0..(X-1)^{2g}. Its
 * projector coordinates are obtained through a fixed per-genus matrix: the
 * coordinate on pi_{2g-j} of a polynomial f is j! [t^j] f(e^t), so that
 * Gamma_n has coordinate n^{2g-i} on pi_i.
 */

#include <map>
#include <string>
#include <vector>

#include "cyclecalc/exact_linalg.hpp"
#include "cyclecalc/rational.hpp"

namespace cyclecalc {

class RingElement {
public:
    static RingElement zero(int genus);
    /// Coefficients on (X-1)^0..(X-1)^{2g}; size must be 2g+1.
    static RingElement from_shifted(int genus, Vector coeffs);
    /// Coordinates on pi_0..pi_{2g}; size must be 2g+1.
    static RingElement from_pi(int genus, const Vector& coords);
    /// Coefficients on Gamma_0..Gamma_{2g} (the monomials X^0..X^{2g}).
    static RingElement from_gamma_basis(int genus, const Vector& coeffs);

    int genus() const { return genus_; }
    std::size_t dimension() const { return shifted_.size(); }

    const Vector& shifted_coeffs() const { return shifted_; }
    /// Entry i is the coordinate on pi_i.
    Vector pi_coeffs() const;
    /// Entry k is the coefficient of Gamma_k, k = 0..2g.
    Vector gamma_basis_coeffs() const;

    bool is_zero() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const Rational& s);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
    RingElement operator-() const;

    friend bool operator==(const RingElement& a, const RingElement& b);

    /// Renders on the Gamma basis, e.g. "10*G0 - 24*G1 + 15*G2".
    std::string str() const;

private:
    RingElement(int genus, Vector shifted) : genus_(genus), shifted_(std::move(shifted)) {}

    int genus_ = 1;
    Vector shifted_;
};

/// Conversion matrices for one genus. Built once and shared read-only.
struct BasisTables {
    int genus;
    Matrix shifted_to_cohomology;  ///< row j: coordinate on pi_{2g-j}
    Matrix cohomology_to_shifted;
};
const BasisTables& basis_tables(int genus);

/// The ideal generated by (Gamma_1 - Gamma_0)^{*threshold}. In projector
/// coordinates it is spanned by the pi_i with 2g - i >= threshold.
struct IdealMask {
    int genus;
    int threshold;
};

RingElement gamma(int genus, long n);
RingElement pontryagin(const RingElement& a, const RingElement& b);
RingElement pontryagin_power(const RingElement& a, unsigned k);
RingElement compose(const RingElement& a, const RingElement& b);
RingElement pi(int genus, int i);
RingElement log_gamma1(int genus);
/// exp of a nilpotent element (zero constant term on the shifted basis).
RingElement pontryagin_exp(const RingElement& a);
RingElement transpose(const RingElement& a);
RingElement reduce_mod(const RingElement& a, const IdealMask& mask);
bool congruent(const RingElement& a, const RingElement& b, const IdealMask& mask);

/// A finite formal sum  sum_n a_n Gamma_n,  independent of genus until it is
/// realized in M. Used wherever formulas are written as combinations of
/// push-forwards n_*.
class GammaCombination {
public:
    GammaCombination() = default;
    static GammaCombination single(long n, Rational coeff = 1);

    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coeff(long n) const;
    void add(long n, const Rational& c);

    GammaCombination& operator+=(const GammaCombination& o);
    GammaCombination& operator-=(const GammaCombination& o);
    GammaCombination& operator*=(const Rational& s);
    friend GammaCombination operator+(GammaCombination a, const GammaCombination& b) { return a += b; }
    friend GammaCombination operator-(GammaCombination a, const GammaCombination& b) { return a -= b; }
    friend GammaCombination operator*(const Rational& s, GammaCombination a) { return a *= s; }
    friend bool operator==(const GammaCombination& a, const GammaCombination& b) { return a.terms_ == b.terms_; }

    /// Precomposition with Gamma_k: Gamma_n -> Gamma_{kn}.
    GammaCombination scaled_index(long k) const;
    /// Scalar by which this acts on the weight-w eigenspace: sum a_n n^w.
    Rational weight_scalar(unsigned weight) const;

    RingElement realize(int genus) const;
    /// e.g. "3*C - 1/2*2_*C" with `symbol` = "C".
    std::string str(const std::string& symbol = "G") const;

private:
    std::map<long, Rational> terms_;  // zero coefficients are never stored
};

}  // namespace cyclecalc
