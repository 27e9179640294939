#include "apofamily/monomiality.hpp"

namespace apofamily {

namespace {

// Coefficients of B e^d / (B e^d - A) as a power series in d, through d^bound.
std::vector<Rational> euler_factor_series(const Rational& A, const Rational& B, long bound) {
    if (A == B) throw UnsupportedOperatorDomain("operator needs B != A: (B e^d - A) is not invertible in d");
    std::vector<Rational> den(static_cast<std::size_t>(bound) + 1);
    std::vector<Rational> num(static_cast<std::size_t>(bound) + 1);
    for (long j = 0; j <= bound; ++j) {
        Rational ex = Rational(1) / rational_factorial(j);
        num[static_cast<std::size_t>(j)] = B * ex;
        den[static_cast<std::size_t>(j)] = B * ex;
    }
    den[0] = B - A;

    // inv = 1/den, then num*inv, truncated convolutions.
    std::vector<Rational> inv(static_cast<std::size_t>(bound) + 1);
    inv[0] = Rational(1) / den[0];
    for (long j = 1; j <= bound; ++j) {
        Rational acc(0);
        for (long i = 1; i <= j; ++i) acc += den[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j - i)];
        inv[static_cast<std::size_t>(j)] = -acc / den[0];
    }
    std::vector<Rational> out(static_cast<std::size_t>(bound) + 1);
    for (long j = 0; j <= bound; ++j) {
        Rational acc(0);
        for (long i = 0; i <= j; ++i) acc += num[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j - i)];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

MultiPoly dx_pow(const MultiPoly& p, long n) {
    MultiPoly r = p;
    for (long i = 0; i < n && !r.is_zero(); ++i) r = r.derivative("x");
    return r;
}

}  // namespace

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
    MultiPoly q = p.extended_to(vars_);
    MultiPoly out = MultiPoly::zero(vars_);
    for (const auto& t : terms_) {
        MultiPoly d = dx_pow(q, t.dpow);
        if (t.antider) d = d.antiderivative("x");
        if (t.premul_x) d = MultiPoly::variable(vars_, "x") * d;
        out += t.mult.extended_to(vars_) * d;
    }
    return out;
}

MultiPoly lowering(const MultiPoly& p) { return p.derivative("x"); }

DiffOperator raising_operator(const FamilyParams& fp, long degree_bound) {
    fp.validate();
    const VarSet vars = VarSet::xyz();
    const long D = degree_bound;
    DiffOperator op(vars, D);
    MultiPoly one = MultiPoly::constant(vars, Rational(1));

    op.add({one, 0, true, false});  // x
    op.add({MultiPoly::variable(vars, "y").scaled(Rational(fp.m)), fp.m - 1, false, false});

    // r z d^{r-1} (1 - z d^r)^{-1} = sum_{j>=0} r z^{j+1} d^{r-1+rj}.
    // The log-derivative of (1-zt^r)^{-1} is +r z t^{r-1}/(1-zt^r); the sign
    // comes out positive, and the raising identity fails with a minus there.
    for (long j = 0; fp.r - 1 + fp.r * j <= D; ++j) {
        MultiPoly zj = MultiPoly::variable(vars, "z").pow(j + 1).scaled(Rational(fp.r));
        op.add({zj, fp.r - 1 + fp.r * j, false, false});
    }

    if (fp.k != 0 && fp.alpha != 0)
        op.add({MultiPoly::constant(vars, Rational(fp.alpha * fp.k)), 0, false, true});

    if (fp.alpha != 0) {
        auto series = euler_factor_series(fp.A, fp.B, D);
        for (long j = 0; j <= D; ++j)
            op.add({MultiPoly::constant(vars, series[static_cast<std::size_t>(j)] * Rational(-fp.alpha)),
                    j, false, false});
    }
    return op;
}

MultiPoly raising(const MultiPoly& p, const FamilyParams& fp, long degree_bound) {
    return raising_operator(fp, degree_bound).apply(p);
}

MultiPoly diffeq_residual(long n, const FamilyParams& fp) {
    fp.validate();
    if (n < 0) throw std::invalid_argument("diffeq_residual: n must be >= 0");
    const VarSet vars = VarSet::xyz();
    const long D = n;
    MultiPoly pn = uateghp_closed(n, fp);

    DiffOperator op(vars, D);
    MultiPoly one = MultiPoly::constant(vars, Rational(1));
    op.add({one, 1, true, false});  // x d
    op.add({MultiPoly::variable(vars, "y").scaled(Rational(fp.m)), fp.m, false, false});
    op.add({MultiPoly::constant(vars, Rational(fp.alpha * fp.k) - Rational(n)), 0, false, false});
    // composed z slot, same positive log-derivative sign as in the raising operator
    for (long j = 0; fp.r + fp.r * j <= D; ++j) {
        MultiPoly zj = MultiPoly::variable(vars, "z").pow(j + 1).scaled(Rational(fp.r));
        op.add({zj, fp.r + fp.r * j, false, false});
    }
    if (fp.alpha != 0) {
        auto series = euler_factor_series(fp.A, fp.B, D);
        for (long j = 0; j + 1 <= D; ++j)
            op.add({MultiPoly::constant(vars, series[static_cast<std::size_t>(j)] * Rational(-fp.alpha)),
                    j + 1, false, false});
    }
    return op.apply(pn);
}

}  // namespace apofamily
