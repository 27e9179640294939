#ifndef APOFAMILY_RATIONAL_HPP
#define APOFAMILY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apofamily {

using Integer = mpz_class;

// Exact arbitrary-precision fraction. Always in lowest terms, denominator > 0,
// zero is 0/1. Every scalar in the engine is one of these; nothing is ever
// rounded.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long n) : value_(static_cast<long>(n)) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    Rational abs() const;

    // Integer power; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    // Canonical form: "p/q", or "p" when q = 1; sign on the numerator.
    std::string to_string() const;

  private:
    mpq_class value_;
};

Integer factorial(long n);
Integer binomial(long n, long k);
Rational rational_factorial(long n);
Rational rational_binomial(long n, long k);

// Rising factorial (x)_j = x(x+1)...(x+j-1); (x)_0 = 1 and
// (x)_{-j} = 1 / (x-j)_j for j > 0.
Rational pochhammer(const Rational& x, long j);

}  // namespace apofamily

#endif
