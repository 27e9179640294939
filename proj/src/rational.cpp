#include "apofamily/rational.hpp"

namespace apofamily {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");

    // Scientific shorthand "mEe" / "me-k" with integer mantissa, for eps flags.
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos && text.find('/') == std::string::npos) {
        Integer mant(text.substr(0, epos));
        long expo = std::stol(text.substr(epos + 1));
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(expo < 0 ? -expo : expo));
        return expo < 0 ? Rational(mant, p10) : Rational(mant * p10);
    }

    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

Rational Rational::abs() const {
    Rational r = *this;
    r.value_ = ::abs(r.value_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational::pow: zero to a negative power");
        return Rational(0);
    }
    Integer num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), ae);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational rational_factorial(long n) { return Rational(factorial(n)); }

Rational rational_binomial(long n, long k) { return Rational(binomial(n, k)); }

Rational pochhammer(const Rational& x, long j) {
    if (j >= 0) {
        Rational r(1);
        for (long i = 0; i < j; ++i) r *= x + Rational(i);
        return r;
    }
    Rational r = pochhammer(x - Rational(-j), -j);
    if (r.is_zero()) throw std::domain_error("pochhammer: negative index hits a zero factor");
    return Rational(1) / r;
}

}  // namespace apofamily
