#pragma once

/**
 * Exact rational scalars backed by GMP.
 *
 * Every coefficient in the engine is a Rational. Values are kept in lowest
 * terms with a positive denominator after every operation, so equality is a
 * plain comparison of numerator and denominator.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclecalc {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(const BigInt& value) : value_(value) {}  // NOLINT
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q" (decimal digits only).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; throws std::domain_error unless is_integer().
    BigInt to_integer() const;
    /// Fits-in-long conversion; throws std::domain_error otherwise.
    long to_long() const;

    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// base^exponent for exponent >= 0; 0^0 = 1.
Rational pow(const Rational& base, unsigned exponent);
BigInt ipow(long base, unsigned exponent);
BigInt factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cyclecalc
