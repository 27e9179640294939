#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apofamily/identities.hpp"
#include "apofamily/laurent.hpp"

using namespace apofamily;

namespace {

const VarSet vx = VarSet::of("x");
const VarSet vxy = VarSet::of("x,y");

MultiPoly cst(const VarSet& vs, const Rational& c) { return MultiPoly::constant(vs, c); }

LaurentSeries scalar(const VarSet& vs, std::vector<Rational> cs) {
    std::vector<MultiPoly> ps;
    for (const auto& c : cs) ps.push_back(cst(vs, c));
    return LaurentSeries(vs, 0, static_cast<long>(cs.size()) - 1, std::move(ps));
}

// e^t - 1 through t^order.
LaurentSeries expm1_series(const VarSet& vs, long order) {
    std::vector<MultiPoly> ps;
    for (long n = 0; n <= order; ++n)
        ps.push_back(cst(vs, n == 0 ? Rational(0) : Rational(1) / rational_factorial(n)));
    return LaurentSeries(vs, 0, order, std::move(ps));
}

// Independent Bernoulli oracle: solve the triangular system coming from
// (e^t - 1)/t * sum B_j t^j/j! = 1 by hand.
std::vector<Rational> bernoulli_by_triangular_solve(long n_max) {
    std::vector<Rational> b;
    for (long n = 0; n <= n_max; ++n) {
        if (n == 0) {
            b.push_back(Rational(1));
            continue;
        }
        Rational acc(0);
        for (long j = 0; j < n; ++j)
            acc += b[static_cast<std::size_t>(j)] /
                   (rational_factorial(j) * rational_factorial(n - j + 1));
        b.push_back(-acc * rational_factorial(n));
    }
    return b;
}

LaurentSeries random_series(ParamSampler& gen, long order, long offset_lo, long offset_hi) {
    long offset = gen.int_in(offset_lo, offset_hi);
    std::vector<MultiPoly> cs;
    for (long n = offset; n <= order; ++n) {
        MultiPoly c = cst(vxy, Rational(gen.int_in(-3, 3), gen.int_in(1, 3)));
        if (gen.int_in(0, 2) == 0)
            c += MultiPoly::variable(vxy, "x").scaled(Rational(gen.int_in(-2, 2)));
        if (gen.int_in(0, 2) == 0)
            c += MultiPoly::variable(vxy, "y").scaled(Rational(gen.int_in(-2, 2)));
        cs.push_back(c);
    }
    return LaurentSeries(vxy, offset, order, std::move(cs));
}

}  // namespace

TEST_CASE("series_mul basics") {
    LaurentSeries one_plus = scalar(vx, {Rational(1), Rational(1), Rational(0)});
    LaurentSeries one_minus = scalar(vx, {Rational(1), Rational(-1), Rational(0)});
    LaurentSeries prod = series_mul(one_plus, one_minus);
    CHECK(prod.at(0) == cst(vx, Rational(1)));
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(2) == cst(vx, Rational(-1)));

    LaurentSeries f = expm1_series(vx, 6);
    CHECK(series_mul(f, LaurentSeries::one(vx, 6)) == f);
}

TEST_CASE("product of exponentials matches the binomial theorem oracle") {
    long N = 8;
    LaurentSeries ex = LaurentSeries::exp_poly_arg(vxy, {{MultiPoly::variable(vxy, "x"), 1}}, N);
    LaurentSeries ey = LaurentSeries::exp_poly_arg(vxy, {{MultiPoly::variable(vxy, "y"), 1}}, N);
    LaurentSeries prod = ex * ey;
    for (long n = 0; n <= N; ++n) {
        // oracle: (x+y)^n = sum_j C(n,j) x^j y^{n-j}, expanded directly
        MultiPoly expect = MultiPoly::zero(vxy);
        for (long j = 0; j <= n; ++j)
            expect += MultiPoly::monomial(vxy, {static_cast<unsigned>(j), static_cast<unsigned>(n - j)},
                                          rational_binomial(n, j));
        CHECK(prod.at(n).scaled(rational_factorial(n)) == expect);
    }
}

TEST_CASE("series_inverse: geometric series") {
    LaurentSeries f = scalar(vx, {Rational(1), Rational(-1), Rational(0), Rational(0)});
    LaurentSeries inv = series_inverse(f);
    for (long n = 0; n <= inv.order(); ++n) CHECK(inv.at(n) == cst(vx, Rational(1)));
}

TEST_CASE("series_inverse: Bernoulli numbers through the convolution oracle") {
    long N = 10;
    LaurentSeries inv = series_inverse(expm1_series(vx, N));
    CHECK(inv.offset() == -1);
    LaurentSeries bgf = inv.shifted(1);  // t/(e^t - 1)
    auto oracle = bernoulli_by_triangular_solve(8);
    for (long n = 0; n <= 8; ++n)
        CHECK(bgf.at(n).constant_term() * rational_factorial(n) == oracle[static_cast<std::size_t>(n)]);
    CHECK(oracle[1] == Rational(-1, 2));
    CHECK(oracle[2] == Rational(1, 6));
}

TEST_CASE("series_inverse: constant-leading series via geometric expansion oracle") {
    LaurentSeries f = scalar(vx, {Rational(2), Rational(1), Rational(0), Rational(0), Rational(0)});
    LaurentSeries inv = series_inverse(f);
    // 1/(2+t) = sum (-1)^n t^n / 2^{n+1}
    for (long n = 0; n <= inv.order(); ++n)
        CHECK(inv.at(n).constant_term() == Rational(n % 2 == 0 ? 1 : -1) / Rational(2).pow(n + 1));
}

TEST_CASE("series_inverse error cases") {
    LaurentSeries zero = LaurentSeries::zero(vx, 4);
    CHECK_THROWS_AS(series_inverse(zero), NonUnitLeading);
    // leading coefficient x*t is not a constant
    LaurentSeries xt = LaurentSeries::from_terms(vx, {{MultiPoly::variable(vx, "x"), 1}}, 4);
    CHECK_THROWS_AS(series_inverse(xt), NonUnitLeading);
    // 1 - z*t^r has constant leading term: invertible
    VarSet vz = VarSet::of("z");
    LaurentSeries ok = LaurentSeries::from_terms(
        vz, {{cst(vz, Rational(1)), 0}, {-MultiPoly::variable(vz, "z"), 2}}, 6);
    CHECK(series_inverse(ok).at(4) == MultiPoly::variable(vz, "z").pow(2));
}

TEST_CASE("series_pow") {
    LaurentSeries f = scalar(vx, {Rational(1), Rational(1), Rational(0)});
    CHECK(series_pow(f, 0) == LaurentSeries::one(vx, 2));
    LaurentSeries sq = series_pow(f, 2);
    CHECK(sq.at(0) == cst(vx, Rational(1)));
    CHECK(sq.at(1) == cst(vx, Rational(2)));
    CHECK(sq.at(2) == cst(vx, Rational(1)));

    // (t/(e^t-1))^{-1} * (t/(e^t-1)) = 1
    LaurentSeries bgf = series_inverse(expm1_series(vx, 12)).shifted(1);
    LaurentSeries prod = series_mul(series_pow(bgf, -1), bgf);
    CHECK(prod == LaurentSeries::one(vx, prod.order()));
}

TEST_CASE("exp_poly_arg") {
    long N = 7;
    LaurentSeries ex = LaurentSeries::exp_poly_arg(vx, {{MultiPoly::variable(vx, "x"), 1}}, N);
    for (long n = 0; n <= N; ++n)
        CHECK(ex.at(n) == MultiPoly::variable(vx, "x").pow(n).scaled(Rational(1) / rational_factorial(n)));
    CHECK(ex.at(5) == MultiPoly::variable(vx, "x").pow(5).scaled(Rational(1, 120)));

    // coefficient of t^3 in e^{xt + yt^2} is x^3/6 + xy
    LaurentSeries gh = LaurentSeries::exp_poly_arg(
        vxy, {{MultiPoly::variable(vxy, "x"), 1}, {MultiPoly::variable(vxy, "y"), 2}}, N);
    MultiPoly expect = MultiPoly::variable(vxy, "x").pow(3).scaled(Rational(1, 6)) +
                       MultiPoly::variable(vxy, "x") * MultiPoly::variable(vxy, "y");
    CHECK(gh.at(3) == expect);

    CHECK(LaurentSeries::exp_poly_arg(vx, {}, 5) == LaurentSeries::one(vx, 5));
    CHECK_THROWS_AS(LaurentSeries::exp_poly_arg(vx, {{cst(vx, Rational(1)), 0}}, 5),
                    NonPositiveValuation);
}

TEST_CASE("rescale_t") {
    long N = 6;
    LaurentSeries e = LaurentSeries::exp_poly_arg(vx, {{cst(vx, Rational(1)), 1}}, N);
    LaurentSeries e2 = series_rescale_t(e, Rational(2));
    for (long n = 0; n <= N; ++n)
        CHECK(e2.at(n).constant_term() == Rational(2).pow(n) / rational_factorial(n));
    CHECK(series_rescale_t(e, Rational(1)) == e);

    LaurentSeries tm1 = LaurentSeries::from_terms(vx, {{cst(vx, Rational(1)), -1}}, 2);
    CHECK(series_rescale_t(tm1, Rational(2)).at(-1) == cst(vx, Rational(1, 2)));
    CHECK_THROWS(series_rescale_t(tm1, Rational(0)));
}

TEST_CASE("coefficient access is strict") {
    LaurentSeries f = scalar(vx, {Rational(1), Rational(0), Rational(3)});
    CHECK(coefficient(f, 2) == cst(vx, Rational(3)));
    CHECK_THROWS_AS(coefficient(f, 3), OutOfOrder);
    CHECK_THROWS_AS(coefficient(f, -1), OutOfOrder);
}

TEST_CASE("ring laws on random series through order 12") {
    ParamSampler gen(2024);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentSeries f = random_series(gen, 12, -2, 2);
        LaurentSeries g = random_series(gen, 12, -2, 2);
        LaurentSeries h = random_series(gen, 12, -2, 2);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
    }
}

TEST_CASE("inverse is a right inverse on random invertible series") {
    ParamSampler gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentSeries f = random_series(gen, 12, -1, 1);
        long lead = gen.int_in(1, 5);
        // force a constant nonzero leading coefficient
        std::vector<MultiPoly> cs;
        for (long n = f.offset(); n <= f.order(); ++n)
            cs.push_back(n == f.offset() ? cst(vxy, Rational(lead)) : f.at(n));
        LaurentSeries g(vxy, f.offset(), f.order(), std::move(cs));
        LaurentSeries prod = g * series_inverse(g);
        CHECK(prod == LaurentSeries::one(vxy, prod.order()));
    }
}

TEST_CASE("rescale composition and coefficient linearity") {
    ParamSampler gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentSeries f = random_series(gen, 10, 0, 2);
        Rational c1(gen.int_in(1, 4), gen.int_in(1, 3));
        Rational c2(gen.int_in(-4, -1), gen.int_in(1, 3));
        CHECK(series_rescale_t(f, c1 * c2) == series_rescale_t(series_rescale_t(f, c1), c2));

        LaurentSeries g = random_series(gen, 10, 0, 2);
        for (long n = 0; n <= 10; ++n) CHECK((f + g).at(n) == f.at(n) + g.at(n));
    }
}

TEST_CASE("exp(A)exp(B) = exp(A+B) for positive-valuation polynomial arguments") {
    ParamSampler gen(13);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::pair<MultiPoly, long>> a = {
            {MultiPoly::variable(vxy, "x").scaled(Rational(gen.int_in(-2, 2))), 1},
            {cst(vxy, Rational(gen.int_in(-2, 2), gen.int_in(1, 2))), gen.int_in(2, 3)}};
        std::vector<std::pair<MultiPoly, long>> b = {
            {MultiPoly::variable(vxy, "y").scaled(Rational(gen.int_in(-2, 2))), gen.int_in(1, 2)}};
        std::vector<std::pair<MultiPoly, long>> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        long N = 9;
        CHECK(LaurentSeries::exp_poly_arg(vxy, a, N) * LaurentSeries::exp_poly_arg(vxy, b, N) ==
              LaurentSeries::exp_poly_arg(vxy, ab, N));
    }
}
