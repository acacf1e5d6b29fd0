#include "cyclecalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cyclecalc {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational literal");
    Rational r{BigInt(std::string(num)), BigInt(std::string(den))};
    return negative ? -r : r;
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    return value_.get_num();
}

long Rational::to_long() const {
    const BigInt n = to_integer();
    if (!n.fits_slong_p()) throw std::domain_error("integer " + str() + " out of range");
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

BigInt ipow(long base, unsigned exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), BigInt(base).get_mpz_t(), exponent);
    return result;
}

BigInt factorial(unsigned n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cyclecalc
