#include "cyclecalc/ring.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/errors.hpp"

namespace cyclecalc {

namespace {

void require_genus(int genus) {
    if (genus < 1) throw DomainError("genus must be >= 1, got " + std::to_string(genus));
}

void require_same_genus(const RingElement& a, const RingElement& b) {
    if (a.genus() != b.genus()) throw GenusMismatch(a.genus(), b.genus());
}

std::size_t dim_for(int genus) { return static_cast<std::size_t>(2 * genus + 1); }

// Stirling numbers up to size n: second[j][k] = S(j,k), first[k][j] = s(k,j) signed.
void stirling_tables(std::size_t n, std::vector<std::vector<BigInt>>& second,
                     std::vector<std::vector<BigInt>>& first) {
    second.assign(n, std::vector<BigInt>(n, 0));
    first.assign(n, std::vector<BigInt>(n, 0));
    second[0][0] = 1;
    first[0][0] = 1;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t k = 1; k <= j; ++k) {
            second[j][k] = BigInt(static_cast<long>(k)) * second[j - 1][k] + second[j - 1][k - 1];
            first[j][k] = first[j - 1][k - 1] - BigInt(static_cast<long>(j - 1)) * first[j - 1][k];
        }
}

std::unique_ptr<BasisTables> build_tables(int genus) {
    const std::size_t n = dim_for(genus);
    std::vector<std::vector<BigInt>> second, first;
    stirling_tables(n, second, first);
    auto t = std::make_unique<BasisTables>();
    t->genus = genus;
    t->shifted_to_cohomology.assign(n, Vector(n, Rational(0)));
    t->cohomology_to_shifted.assign(n, Vector(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt kf = factorial(static_cast<unsigned>(k));
            t->shifted_to_cohomology[j][k] = Rational(kf * second[j][k]);
            t->cohomology_to_shifted[k][j] = Rational(first[k][j], kf);
        }
    return t;
}

}  // namespace

const BasisTables& basis_tables(int genus) {
    require_genus(genus);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<BasisTables>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[genus];
    if (!slot) slot = build_tables(genus);
    return *slot;
}

RingElement RingElement::zero(int genus) {
    require_genus(genus);
    return RingElement(genus, Vector(dim_for(genus), Rational(0)));
}

RingElement RingElement::from_shifted(int genus, Vector coeffs) {
    require_genus(genus);
    if (coeffs.size() != dim_for(genus)) throw DomainError("shifted coefficient vector has wrong length");
    return RingElement(genus, std::move(coeffs));
}

RingElement RingElement::from_pi(int genus, const Vector& coords) {
    require_genus(genus);
    const std::size_t n = dim_for(genus);
    if (coords.size() != n) throw DomainError("projector coordinate vector has wrong length");
    Vector cohomology(n);
    for (std::size_t j = 0; j < n; ++j) cohomology[j] = coords[n - 1 - j];
    return RingElement(genus, multiply(basis_tables(genus).cohomology_to_shifted, cohomology));
}

RingElement RingElement::from_gamma_basis(int genus, const Vector& coeffs) {
    require_genus(genus);
    const std::size_t n = dim_for(genus);
    if (coeffs.size() != n) throw DomainError("Gamma coefficient vector has wrong length");
    Vector shifted(n, Rational(0));
    // X^k = sum_j binom(k, j) (X-1)^j
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            shifted[j] += coeffs[k] * Rational(binom(static_cast<long>(k), static_cast<long>(j)));
    return RingElement(genus, std::move(shifted));
}

Vector RingElement::pi_coeffs() const {
    const Vector cohomology = multiply(basis_tables(genus_).shifted_to_cohomology, shifted_);
    const std::size_t n = cohomology.size();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = cohomology[n - 1 - i];
    return out;
}

Vector RingElement::gamma_basis_coeffs() const {
    const std::size_t n = shifted_.size();
    Vector out(n, Rational(0));
    // (X-1)^k = sum_j binom(k, j) (-1)^(k-j) X^j
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            Rational c = shifted_[k] * Rational(binom(static_cast<long>(k), static_cast<long>(j)));
            out[j] += ((k - j) % 2 == 0) ? c : -c;
        }
    return out;
}

bool RingElement::is_zero() const {
    for (const auto& c : shifted_)
        if (!c.is_zero()) return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    require_same_genus(*this, o);
    for (std::size_t k = 0; k < shifted_.size(); ++k) shifted_[k] += o.shifted_[k];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    require_same_genus(*this, o);
    for (std::size_t k = 0; k < shifted_.size(); ++k) shifted_[k] -= o.shifted_[k];
    return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
    for (auto& c : shifted_) c *= s;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    r *= Rational(-1);
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.genus_ == b.genus_ && a.shifted_ == b.shifted_;
}

std::string RingElement::str() const {
    const Vector g = gamma_basis_coeffs();
    std::string s;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) continue;
        const Rational mag = g[k].sign() < 0 ? -g[k] : g[k];
        if (s.empty())
            s += g[k].sign() < 0 ? "-" : "";
        else
            s += g[k].sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) s += mag.str() + "*";
        s += "G" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

RingElement gamma(int genus, long n) {
    require_genus(genus);
    const std::size_t dim = dim_for(genus);
    Vector shifted(dim);
    for (std::size_t k = 0; k < dim; ++k) shifted[k] = Rational(binom(n, static_cast<long>(k)));
    return RingElement::from_shifted(genus, std::move(shifted));
}

RingElement pontryagin(const RingElement& a, const RingElement& b) {
    require_same_genus(a, b);
    const auto& x = a.shifted_coeffs();
    const auto& y = b.shifted_coeffs();
    const std::size_t n = x.size();
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += x[i] * y[j];
    }
    return RingElement::from_shifted(a.genus(), std::move(out));
}

RingElement pontryagin_power(const RingElement& a, unsigned k) {
    RingElement result = gamma(a.genus(), 0);
    RingElement base = a;
    for (; k > 0; k >>= 1) {
        if (k & 1U) result = pontryagin(result, base);
        if (k > 1) base = pontryagin(base, base);
    }
    return result;
}

RingElement compose(const RingElement& a, const RingElement& b) {
    require_same_genus(a, b);
    Vector x = a.pi_coeffs();
    const Vector y = b.pi_coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= y[i];
    return RingElement::from_pi(a.genus(), x);
}

RingElement log_gamma1(int genus) {
    require_genus(genus);
    const std::size_t n = dim_for(genus);
    Vector shifted(n, Rational(0));
    for (std::size_t k = 1; k < n; ++k)
        shifted[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    return RingElement::from_shifted(genus, std::move(shifted));
}

RingElement pi(int genus, int i) {
    require_genus(genus);
    if (i < 0 || i > 2 * genus)
        throw DomainError("projector index " + std::to_string(i) + " outside [0, " + std::to_string(2 * genus) + "]");
    const unsigned e = static_cast<unsigned>(2 * genus - i);
    RingElement p = pontryagin_power(log_gamma1(genus), e);
    p *= Rational(BigInt(1), factorial(e));
    return p;
}

RingElement pontryagin_exp(const RingElement& a) {
    if (!a.shifted_coeffs().front().is_zero()) throw DomainError("pontryagin_exp needs a nilpotent argument");
    RingElement sum = RingElement::zero(a.genus());
    RingElement term = gamma(a.genus(), 0);
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        sum += term;
        term = pontryagin(term, a);
        term *= Rational(1, static_cast<long>(k + 1));
    }
    return sum;
}

RingElement transpose(const RingElement& a) {
    Vector c = a.pi_coeffs();
    std::reverse(c.begin(), c.end());
    return RingElement::from_pi(a.genus(), c);
}

RingElement reduce_mod(const RingElement& a, const IdealMask& mask) {
    if (mask.genus != a.genus()) throw GenusMismatch(a.genus(), mask.genus);
    Vector c = a.pi_coeffs();
    const int top = 2 * a.genus();
    for (int i = 0; i <= top; ++i)
        if (top - i >= mask.threshold) c[static_cast<std::size_t>(i)] = 0;
    return RingElement::from_pi(a.genus(), c);
}

bool congruent(const RingElement& a, const RingElement& b, const IdealMask& mask) {
    return reduce_mod(a - b, mask).is_zero();
}

GammaCombination GammaCombination::single(long n, Rational coeff) {
    GammaCombination g;
    g.add(n, coeff);
    return g;
}

Rational GammaCombination::coeff(long n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GammaCombination::add(long n, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GammaCombination& GammaCombination::operator+=(const GammaCombination& o) {
    for (const auto& [n, c] : o.terms_) add(n, c);
    return *this;
}

GammaCombination& GammaCombination::operator-=(const GammaCombination& o) {
    for (const auto& [n, c] : o.terms_) add(n, -c);
    return *this;
}

GammaCombination& GammaCombination::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
}

GammaCombination GammaCombination::scaled_index(long k) const {
    GammaCombination out;
    for (const auto& [n, c] : terms_) out.add(k * n, c);
    return out;
}

Rational GammaCombination::weight_scalar(unsigned weight) const {
    Rational s(0);
    for (const auto& [n, c] : terms_) s += c * Rational(ipow(n, weight));
    return s;
}

RingElement GammaCombination::realize(int genus) const {
    RingElement r = RingElement::zero(genus);
    for (const auto& [n, c] : terms_) r += c * gamma(genus, n);
    return r;
}

std::string GammaCombination::str(const std::string& symbol) const {
    std::string s;
    for (const auto& [n, c] : terms_) {
        const Rational mag = c.sign() < 0 ? -c : c;
        if (s.empty())
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) s += mag.str() + "*";
        if (symbol == "G")
            s += "G" + std::to_string(n);
        else if (n == 1)
            s += symbol;
        else if (n == -1)
            s += symbol + "^-";
        else if (n < 0)
            s += "(" + std::to_string(n) + ")_*" + symbol;
        else
            s += std::to_string(n) + "_*" + symbol;
    }
    return s.empty() ? "0" : s;
}

}  // namespace cyclecalc
