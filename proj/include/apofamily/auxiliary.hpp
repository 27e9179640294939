#ifndef APOFAMILY_AUXILIARY_HPP
#define APOFAMILY_AUXILIARY_HPP

#include "apofamily/laurent.hpp"

namespace apofamily {

// Hurwitz-Lerch query outside the strict convergence disc.
struct DivergentQuery : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Array type polynomial S(x; n, nu; lambda): n!*[t^n] of
// ((lambda e^t - 1)^nu / nu!) e^{xt}, over {x}.
MultiPoly array_type_poly(long n, long nu, const Rational& lambda);

// lambda-Stirling number of the second kind, S(n, nu; lambda) = S(0; n, nu; lambda).
Rational lambda_stirling(long n, long nu, const Rational& lambda);

struct ZetaQuery {
    long mu = 1;        // Pochhammer order, >= 1
    Rational w;         // argument, |w| < 1 strictly
    long s = 0;         // integer exponent; the identities use s <= 0
    Rational x;         // shift, > 0
    Rational eps;       // requested certified tail bound, > 0

    void validate() const;
};

struct ZetaResult {
    Rational value;
    Rational tail_bound;
    long terms_used = 0;
};

// Partial sum of sum_n (mu)_n/n! * w^n / (n+x)^s with a certified geometric
// tail bound <= eps. All arithmetic exact; the bound is rigorous, not an
// estimate.
ZetaResult hurwitz_lerch(const ZetaQuery& q);

enum class PowerSumForm {
    printed,    // (lambda e^{(n+1)t} - 1) / (lambda e^t - 1), as printed
    geometric,  // sum_{i=0..n} (lambda e^t)^i, i.e. S_k = sum lambda^i i^k
};

struct PowerSumSpec {
    enum class Kind { single, multiple } kind = Kind::single;
    long n = 0;   // single: upper summation index
    long m = 1;   // multiple: inner multiplier, >= 1
    long l = 1;   // multiple: power, >= 1
    Rational lambda;

    void validate() const;
};

// S_k(n; lambda) = k!*[t^k] of the chosen generating form.
Rational power_sum_S(long k, long n, const Rational& lambda,
                     PowerSumForm form = PowerSumForm::printed);

// W_n = n! * lambda^l * [t^n] of ((1 - lambda^m e^{mt}) / (1 - lambda e^t))^l,
// the bracketed combination the symmetry theorems consume.
Rational multi_power_sum_combo(long n, long m, const Rational& lambda, long l);

struct Composition {
    std::vector<long> nu;  // nu_1 .. nu_{s-1}
    Integer coeff;         // alpha! / (nu_0! nu_1! ... nu_{s-1}!), nu_0 = alpha - sum
    long ell = 0;          // nu_1 + 2 nu_2 + ... + (s-1) nu_{s-1}
};

// All (nu_1..nu_{s-1}) with sum <= alpha, in lexicographic order.
std::vector<Composition> multinomial_compositions(long s, long alpha);

// Exact-composition variant: sum nu_i = alpha exactly, no nu_0 slot.
std::vector<Composition> multinomial_compositions_exact(long s, long alpha);

}  // namespace apofamily

#endif
