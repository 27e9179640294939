#include "apofamily/auxiliary.hpp"

#include <algorithm>
#include <functional>

namespace apofamily {

namespace {

// Scalar power series sum_i coef(i)*t^i over a throwaway variable set.
LaurentSeries scalar_series(long order, const std::function<Rational(long)>& coef) {
    const VarSet vars = VarSet::of("x");
    std::vector<MultiPoly> c;
    for (long n = 0; n <= order; ++n) c.push_back(MultiPoly::constant(vars, coef(n)));
    return LaurentSeries(vars, 0, order, std::move(c));
}

LaurentSeries scaled_exp(long order, const Rational& lambda, long stretch) {
    // lambda * e^{stretch * t}
    return scalar_series(order, [&](long n) {
        return lambda * Rational(stretch).pow(n) / rational_factorial(n);
    });
}

}  // namespace

MultiPoly array_type_poly(long n, long nu, const Rational& lambda) {
    if (n < 0 || nu < 0) throw std::invalid_argument("array_type_poly: negative index");
    const VarSet vars = VarSet::of("x");
    // ((lambda e^t - 1)^nu / nu!) e^{xt}
    std::vector<MultiPoly> base;
    for (long j = 0; j <= n; ++j)
        base.push_back(MultiPoly::constant(vars, j == 0 ? lambda - Rational(1) : lambda / rational_factorial(j)));
    LaurentSeries core = LaurentSeries(vars, 0, n, std::move(base)).pow(nu);
    LaurentSeries expo = LaurentSeries::exp_poly_arg(vars, {{MultiPoly::variable(vars, "x"), 1}}, n);
    LaurentSeries gf = core * expo;
    MultiPoly out = gf.at(n).scaled(rational_factorial(n) / rational_factorial(nu));
    return out;
}

Rational lambda_stirling(long n, long nu, const Rational& lambda) {
    return array_type_poly(n, nu, lambda).evaluate({{"x", Rational(0)}});
}

void ZetaQuery::validate() const {
    if (mu < 1) throw std::invalid_argument("ZetaQuery: mu must be >= 1");
    if (!(eps > Rational(0))) throw std::invalid_argument("ZetaQuery: eps must be positive");
    if (!(x > Rational(0))) throw std::invalid_argument("ZetaQuery: x must be positive");
    if (w.abs() >= Rational(1)) throw DivergentQuery("ZetaQuery: |w| must be < 1");
}

ZetaResult hurwitz_lerch(const ZetaQuery& q) {
    q.validate();

    // term(p) = (mu)_p/p! * w^p * (p+x)^{-s}
    auto term = [&](long p) {
        Rational t = pochhammer(Rational(q.mu), p) / rational_factorial(p);
        t *= q.w.pow(p);
        t *= (Rational(p) + q.x).pow(-q.s);
        return t;
    };

    if (q.w.is_zero()) return {term(0), Rational(0), 1};

    // Successive |term| ratios tend monotonically to |w| once p is large
    // enough; stop when the observed ratio is below 1, non-increasing, and
    // the geometric tail |term_p|*rho/(1-rho) is within eps.
    Rational sum = term(0);
    Rational prev = sum.abs();
    Rational prev_ratio(-1);
    long p = 0;
    while (true) {
        ++p;
        if (p > 100000) throw std::runtime_error("hurwitz_lerch: no certified convergence in 1e5 terms");
        Rational t = term(p);
        sum += t;
        Rational cur = t.abs();
        if (!prev.is_zero()) {
            Rational ratio = cur / prev;
            bool monotone = prev_ratio.sign() < 0 || ratio <= prev_ratio;
            if (monotone && ratio < Rational(1)) {
                Rational tail = cur * ratio / (Rational(1) - ratio);
                if (tail <= q.eps) return {sum, tail, p + 1};
            }
            prev_ratio = ratio;
        }
        prev = cur;
    }
}

void PowerSumSpec::validate() const {
    if (kind == Kind::multiple && l < 1) throw std::invalid_argument("PowerSumSpec: l must be >= 1");
    if (kind == Kind::multiple && m < 1) throw std::invalid_argument("PowerSumSpec: m must be >= 1");
    if (kind == Kind::single && n < 0) throw std::invalid_argument("PowerSumSpec: n must be >= 0");
}

Rational power_sum_S(long k, long n, const Rational& lambda, PowerSumForm form) {
    if (k < 0 || n < 0) throw std::invalid_argument("power_sum_S: negative index");
    if (form == PowerSumForm::geometric) {
        // sum_{i=0..n} lambda^i i^k, with 0^0 = 1.
        Rational acc(0);
        for (long i = 0; i <= n; ++i)
            acc += lambda.pow(i) * (i == 0 ? Rational(k == 0 ? 1 : 0) : Rational(i).pow(k));
        return acc;
    }
    long work = k + 2;
    LaurentSeries num = scaled_exp(work, lambda, n + 1) - scalar_series(work, [](long j) {
                            return Rational(j == 0 ? 1 : 0);
                        });
    LaurentSeries den = scaled_exp(work, lambda, 1) - scalar_series(work, [](long j) {
                            return Rational(j == 0 ? 1 : 0);
                        });
    if (den.is_zero_through_order()) throw SeriesError("power_sum_S: denominator identically zero");
    LaurentSeries gf = num * den.inverse();
    return gf.at(k).constant_term() * rational_factorial(k);
}

Rational multi_power_sum_combo(long n, long m, const Rational& lambda, long l) {
    if (n < 0) throw std::invalid_argument("multi_power_sum_combo: negative order");
    PowerSumSpec spec{PowerSumSpec::Kind::multiple, 0, m, l, lambda};
    spec.validate();
    long work = n + 2 * l + 2;
    // (1 - lambda^m e^{mt}) / (1 - lambda e^t), as printed.
    LaurentSeries one_s = scalar_series(work, [](long j) { return Rational(j == 0 ? 1 : 0); });
    LaurentSeries num = one_s - scaled_exp(work, lambda.pow(m), m);
    LaurentSeries den = one_s - scaled_exp(work, lambda, 1);
    if (den.is_zero_through_order()) throw SeriesError("multi_power_sum_combo: denominator identically zero");
    LaurentSeries gf = (num * den.inverse()).pow(l);
    return gf.at(n).constant_term() * rational_factorial(n) * lambda.pow(l);
}

namespace {

void enumerate(long slots, long remaining, std::vector<long>& nu, long alpha, bool exact,
               std::vector<Composition>& out) {
    if (static_cast<long>(nu.size()) == slots) {
        if (exact && remaining != 0) return;
        Composition c;
        c.nu = nu;
        Integer denom = exact ? Integer(1) : factorial(remaining);  // nu_0!
        for (long v : nu) denom *= factorial(v);
        c.coeff = factorial(alpha) / denom;
        c.ell = 0;
        for (std::size_t i = 0; i < nu.size(); ++i) c.ell += static_cast<long>(i + 1) * nu[i];
        out.push_back(std::move(c));
        return;
    }
    for (long v = 0; v <= remaining; ++v) {
        nu.push_back(v);
        enumerate(slots, remaining - v, nu, alpha, exact, out);
        nu.pop_back();
    }
}

}  // namespace

std::vector<Composition> multinomial_compositions(long s, long alpha) {
    if (s < 1 || alpha < 0) throw std::invalid_argument("multinomial_compositions: bad arguments");
    std::vector<Composition> out;
    std::vector<long> nu;
    enumerate(s - 1, alpha, nu, alpha, false, out);
    return out;
}

std::vector<Composition> multinomial_compositions_exact(long s, long alpha) {
    if (s < 1 || alpha < 0) throw std::invalid_argument("multinomial_compositions_exact: bad arguments");
    std::vector<Composition> out;
    std::vector<long> nu;
    enumerate(s - 1, alpha, nu, alpha, true, out);
    return out;
}

}  // namespace apofamily
