#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace momentlab {

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Text form is "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
    Rational(long num, long den);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
    explicit Rational(const mpz_class& value) : value_(value) {}

    /// Parses "p", "-p", "p/q". Throws MathError(ParseError) on malformed input or q = 0.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Division by zero throws std::domain_error.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

Rational factorial(unsigned n);
Rational binomial(long n, long k);  // 0 when k < 0 or k > n

}  // namespace momentlab
