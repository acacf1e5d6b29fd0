#include "cyclecalc/graded.hpp"

#include <algorithm>
#include <set>

#include "cyclecalc/errors.hpp"

namespace cyclecalc {

namespace {

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    std::string s;
    for (const auto& [c, sym] : terms) {
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (s.empty())
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        if (sym.empty())
            s += mag.str();
        else
            s += (mag == Rational(1) ? "" : mag.str() + "*") + sym;
    }
    return s.empty() ? "0" : s;
}

std::string generator_name(int weight) { return "C_(" + std::to_string(weight) + ")"; }

bool keeps_weight(const EquivalenceLevel& level, int dimension, int weight) {
    switch (level.kind()) {
        case EquivalenceLevel::Kind::chow: return true;
        case EquivalenceLevel::Kind::homological: return weight == 2 * dimension;
        case EquivalenceLevel::Kind::abel_jacobi: return weight == 2 * dimension || weight == 2 * dimension + 1;
        case EquivalenceLevel::Kind::algebraic: return weight >= 2 && weight <= level.gonality();
    }
    return true;
}

}  // namespace

EquivalenceLevel EquivalenceLevel::algebraic(int gonality) {
    if (gonality < 2) throw DomainError("algebraic level needs gonality >= 2, got " + std::to_string(gonality));
    return EquivalenceLevel(Kind::algebraic, gonality);
}

EquivalenceLevel EquivalenceLevel::parse(const std::string& name, std::optional<int> gonality) {
    if (name == "chow") return chow();
    if (name == "hom") return homological();
    if (name == "aj") return abel_jacobi();
    if (name == "alg") {
        if (!gonality) throw DomainError("level 'alg' requires a gonality");
        return algebraic(*gonality);
    }
    throw DomainError("unknown equivalence level '" + name + "' (expected chow|hom|aj|alg)");
}

std::string EquivalenceLevel::name() const {
    switch (kind_) {
        case Kind::chow: return "chow";
        case Kind::homological: return "hom";
        case Kind::abel_jacobi: return "aj";
        case Kind::algebraic: return "alg(" + std::to_string(gonality_) + ")";
    }
    return "?";
}

CurveClass::CurveClass(int genus, Vector coeffs) : genus_(genus), coeffs_(std::move(coeffs)) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(genus + 1))
        throw DomainError("curve class needs exactly g+1 coefficients");
    if (!coeffs_[0].is_zero()) throw DomainError("weight-1 coefficient of a curve class must be zero");
}

CurveClass CurveClass::zero(int genus) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    return CurveClass(genus, Vector(static_cast<std::size_t>(genus + 1), Rational(0)));
}

CurveClass CurveClass::generator(int genus, int weight) {
    if (weight < 2 || weight > genus + 1) throw DomainError("no generator C_(" + std::to_string(weight) + ")");
    CurveClass c = zero(genus);
    c.coeffs_[static_cast<std::size_t>(weight - 1)] = 1;
    return c;
}

const Rational& CurveClass::coeff(int weight) const {
    if (weight < 1 || weight > genus_ + 1) throw DomainError("weight out of range");
    return coeffs_[static_cast<std::size_t>(weight - 1)];
}

bool CurveClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

CurveClass& CurveClass::operator+=(const CurveClass& o) {
    if (genus_ != o.genus_) throw GenusMismatch(genus_, o.genus_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& o) {
    if (genus_ != o.genus_) throw GenusMismatch(genus_, o.genus_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CurveClass& CurveClass::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string CurveClass::str() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (int w = 1; w <= genus_ + 1; ++w) terms.emplace_back(coeff(w), generator_name(w));
    return render_terms(terms);
}

GradedCycle::GradedCycle(int genus, int dimension, std::map<int, Rational> components)
    : genus_(genus), dimension_(dimension) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    if (dimension < 0 || dimension > genus) throw DomainError("cycle dimension outside [0, g]");
    for (auto& [w, c] : components) {
        if (c.is_zero()) continue;
        if (w < dimension || w > dimension + genus)
            throw DomainError("weight " + std::to_string(w) + " outside [d', d'+g]");
        components_.emplace(w, std::move(c));
    }
}

GradedCycle GradedCycle::from_curve(const CurveClass& cc) {
    std::map<int, Rational> m;
    for (int w = 1; w <= cc.max_weight(); ++w) m.emplace(w, cc.coeff(w));
    return GradedCycle(cc.genus(), 1, std::move(m));
}

Rational GradedCycle::coeff(int weight) const {
    auto it = components_.find(weight);
    return it == components_.end() ? Rational(0) : it->second;
}

std::string GradedCycle::str() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [w, c] : components_) terms.emplace_back(c, "a_(" + std::to_string(w) + ")");
    return render_terms(terms);
}

CurveClass unit_curve(int genus) {
    CurveClass c = CurveClass::zero(genus);
    for (int w = 2; w <= genus + 1; ++w) c += CurveClass::generator(genus, w);
    return c;
}

CurveClass push_forward(long n, const CurveClass& cc) {
    Vector out = cc.coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= Rational(ipow(n, static_cast<unsigned>(i + 1)));
    return CurveClass(cc.genus(), std::move(out));
}

GradedCycle push_forward(long n, const GradedCycle& alpha) {
    std::map<int, Rational> m;
    for (const auto& [w, c] : alpha.components()) m.emplace(w, c * Rational(ipow(n, static_cast<unsigned>(w))));
    return GradedCycle(alpha.genus(), alpha.dimension(), std::move(m));
}

CurveClass apply_operator(const RingElement& op, const CurveClass& cc) {
    if (op.genus() != cc.genus()) throw GenusMismatch(op.genus(), cc.genus());
    const Vector p = op.pi_coeffs();
    const int g = cc.genus();
    Vector out = cc.coeffs();
    for (int w = 1; w <= g + 1; ++w) out[static_cast<std::size_t>(w - 1)] *= p[static_cast<std::size_t>(2 * g - w)];
    return CurveClass(g, std::move(out));
}

GradedCycle apply_operator(const RingElement& op, const GradedCycle& alpha) {
    if (op.genus() != alpha.genus()) throw GenusMismatch(op.genus(), alpha.genus());
    const Vector p = op.pi_coeffs();
    const int g = alpha.genus();
    std::map<int, Rational> m;
    for (const auto& [w, c] : alpha.components()) m.emplace(w, c * p[static_cast<std::size_t>(2 * g - w)]);
    return GradedCycle(g, alpha.dimension(), std::move(m));
}

CurveClass apply_combination(const GammaCombination& comb, const CurveClass& cc) {
    CurveClass out = CurveClass::zero(cc.genus());
    for (const auto& [n, c] : comb.terms()) out += c * push_forward(n, cc);
    return out;
}

CurveClass quotient(const CurveClass& cc, const EquivalenceLevel& level) {
    Vector out = cc.coeffs();
    for (int w = 1; w <= cc.max_weight(); ++w)
        if (!keeps_weight(level, 1, w)) out[static_cast<std::size_t>(w - 1)] = 0;
    return CurveClass(cc.genus(), std::move(out));
}

GradedCycle quotient(const GradedCycle& alpha, const EquivalenceLevel& level) {
    if (level.kind() == EquivalenceLevel::Kind::algebraic && alpha.dimension() != 1)
        throw DomainError("algebraic level is only modelled for 1-cycles");
    std::map<int, Rational> m;
    for (const auto& [w, c] : alpha.components())
        if (keeps_weight(level, alpha.dimension(), w)) m.emplace(w, c);
    return GradedCycle(alpha.genus(), alpha.dimension(), std::move(m));
}

PushforwardDecomposition decompose_by_pushforwards(const CurveClass& cc, const std::vector<long>& samples) {
    PushforwardDecomposition out;
    for (int w = 2; w <= cc.max_weight(); ++w)
        if (!cc.coeff(w).is_zero()) out.weights.push_back(w);
    const std::set<long> distinct(samples.begin(), samples.end());
    if (distinct.size() != samples.size() || distinct.count(0))
        throw DomainError("push-forward samples must be distinct and nonzero");
    if (samples.size() < out.weights.size())
        throw DomainError("need at least " + std::to_string(out.weights.size()) + " samples");
    const std::size_t k = out.weights.size();
    out.samples.assign(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(k));

    // rows: n_j^{w_r}
    Matrix vandermonde(k, Vector(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = 0; r < k; ++r)
            vandermonde[j][r] = Rational(ipow(out.samples[j], static_cast<unsigned>(out.weights[r])));
    out.combination = inverse(vandermonde);

    std::vector<CurveClass> pushed;
    for (long n : out.samples) pushed.push_back(push_forward(n, cc));
    for (std::size_t r = 0; r < k; ++r) {
        CurveClass comp = CurveClass::zero(cc.genus());
        for (std::size_t j = 0; j < k; ++j) comp += out.combination[r][j] * pushed[j];
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::size_t span_dim(const std::vector<CurveClass>& classes, const EquivalenceLevel& level) {
    if (classes.empty()) return 0;
    Matrix rows;
    for (const auto& c : classes) {
        if (c.genus() != classes.front().genus()) throw GenusMismatch(classes.front().genus(), c.genus());
        rows.push_back(quotient(c, level).coeffs());
    }
    return rank(std::move(rows));
}

std::size_t span_dim(const std::vector<GradedCycle>& cycles, const EquivalenceLevel& level) {
    if (cycles.empty()) return 0;
    const int g = cycles.front().genus();
    const int d = cycles.front().dimension();
    Matrix rows;
    for (const auto& a : cycles) {
        if (a.genus() != g) throw GenusMismatch(g, a.genus());
        if (a.dimension() != d) throw DomainError("span_dim: cycles of different dimension");
        const GradedCycle q = quotient(a, level);
        Vector row;
        for (int w = a.min_weight(); w <= a.max_weight(); ++w) row.push_back(q.coeff(w));
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

int Monomial::degree() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
}

int Monomial::weight() const {
    int s = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) s += exps[k] * static_cast<int>(k + 2);
    return s;
}

std::string Monomial::str() const {
    std::string s;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += generator_name(static_cast<int>(k + 2));
        if (exps[k] > 1) s += "^" + std::to_string(exps[k]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Multinomial& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    // highest power of C_(2) first reads closest to the usual notation
    for (auto it = p.rbegin(); it != p.rend(); ++it) terms.emplace_back(it->second, it->first.str());
    return render_terms(terms);
}

std::vector<int> WDecomposition::weights() const {
    std::vector<int> w;
    for (const auto& [k, v] : terms) w.push_back(k);
    return w;
}

int WDecomposition::top_weight() const { return terms.empty() ? 0 : terms.rbegin()->first; }

std::size_t WDecomposition::algebraic_dim_bound() const { return terms.empty() ? 0 : terms.size() - 1; }

WDecomposition WDecomposition::project(int weight) const {
    WDecomposition out = *this;
    out.terms.clear();
    if (auto it = terms.find(weight); it != terms.end()) out.terms.insert(*it);
    return out;
}

std::string WDecomposition::str() const {
    std::string s;
    for (const auto& [w, p] : terms) {
        if (!s.empty()) s += "\n";
        s += "weight " + std::to_string(w) + ": " + to_string(p);
        if (w == theta_weight) s += "   [= " + theta_label + "]";
    }
    return s.empty() ? "0" : s;
}

namespace {

void enumerate_multisets(std::size_t symbols, int remaining, std::size_t from, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial{exps});
        return;
    }
    for (std::size_t k = from; k < symbols; ++k) {
        ++exps[k];
        enumerate_multisets(symbols, remaining - 1, k, exps, out);
        --exps[k];
    }
}

}  // namespace

WDecomposition decompose_w(int genus, int codim) {
    if (codim < 1 || codim > genus - 1)
        throw DomainError("W decomposition needs 1 <= d <= g-1 (g=" + std::to_string(genus) +
                          ", d=" + std::to_string(codim) + ")");
    WDecomposition out;
    out.genus = genus;
    out.codim = codim;
    out.index = genus - codim;
    out.theta_weight = 2 * out.index;
    out.theta_label = "Theta^" + std::to_string(codim) + "/" + std::to_string(codim) + "!";

    std::vector<Monomial> monomials;
    std::vector<int> exps(static_cast<std::size_t>(genus), 0);
    enumerate_multisets(static_cast<std::size_t>(genus), out.index, 0, exps, monomials);

    const int bound = out.index + genus;  // = 2g - d
    std::map<int, Multinomial> all;
    for (const auto& mono : monomials) {
        // (1/m!) * m!/prod(e!) = 1/prod(e!)
        BigInt denom = 1;
        for (int e : mono.exps) denom *= factorial(static_cast<unsigned>(e));
        all[mono.weight()][mono] = Rational(BigInt(1), denom);
    }
    for (auto& [w, p] : all) {
        if (w <= bound)
            out.terms.emplace(w, std::move(p));
        else
            out.discarded.push_back({w, std::move(p),
                                     "weight " + std::to_string(w) + " exceeds dimension + genus = " +
                                         std::to_string(bound) + "; such components vanish on an abelian variety"});
    }
    return out;
}

WDecomposition apply_operator(const RingElement& op, const WDecomposition& w) {
    if (op.genus() != w.genus) throw GenusMismatch(op.genus(), w.genus);
    const Vector p = op.pi_coeffs();
    WDecomposition out = w;
    out.terms.clear();
    for (const auto& [weight, poly] : w.terms) {
        const Rational s = p[static_cast<std::size_t>(2 * w.genus - weight)];
        if (s.is_zero()) continue;
        Multinomial scaled;
        for (const auto& [mono, c] : poly) scaled.emplace(mono, c * s);
        out.terms.emplace(weight, std::move(scaled));
    }
    return out;
}

WDecomposition quotient(const WDecomposition& w, const EquivalenceLevel& level) {
    if (level.kind() == EquivalenceLevel::Kind::algebraic)
        throw DomainError("algebraic level is only modelled for 1-cycles");
    WDecomposition out = w;
    out.terms.clear();
    for (const auto& [weight, poly] : w.terms)
        if (keeps_weight(level, w.index, weight)) out.terms.emplace(weight, poly);
    return out;
}

CurveClass gross_schoen(int genus) {
    if (genus < 3) throw DomainError("Gross-Schoen cycle needs g >= 3");
    const RingElement diff = gamma(genus, 1) - gamma(genus, 0);
    return apply_operator(pontryagin_power(diff, 3), unit_curve(genus));
}

CurveClass ceresa(int genus) {
    const CurveClass c = unit_curve(genus);
    return c - push_forward(-1, c);
}

}  // namespace cyclecalc
