#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apofamily/families.hpp"
#include "apofamily/identities.hpp"

using namespace apofamily;

namespace {

const VarSet vxyz = VarSet::xyz();

MultiPoly X() { return MultiPoly::variable(vxyz, "x"); }
MultiPoly Y() { return MultiPoly::variable(vxyz, "y"); }
MultiPoly Z() { return MultiPoly::variable(vxyz, "z"); }
MultiPoly C(const Rational& c) { return MultiPoly::constant(vxyz, c); }

// e^{xt+yt^m}/(1-zt^r) built from pieces, as an oracle for the alpha = 0 family.
LaurentSeries tegh_gf_oracle(long m, long r, long order) {
    LaurentSeries expo = LaurentSeries::exp_poly_arg(vxyz, {{X(), 1}, {Y(), m}}, order);
    LaurentSeries trunc =
        LaurentSeries::from_terms(vxyz, {{C(Rational(1)), 0}, {-Z(), r}}, order).inverse();
    return (expo * trunc).truncated(order);
}

FamilyParams sample_params(ParamSampler& gen) {
    FamilyParams fp;
    fp.k = gen.int_in(0, 2);
    fp.alpha = gen.int_in(0, 2);
    fp.m = gen.int_in(1, 3);
    fp.r = gen.int_in(1, 3);
    fp.A = gen.small_rational();
    do {
        fp.B = gen.small_rational();
    } while (fp.B == fp.A);
    return fp;
}

}  // namespace

TEST_CASE("apostol prefactor reproduces the Bernoulli numbers at (1,1,1,1)") {
    FamilyParams fp{1, Rational(1), Rational(1), 1, 2, 2};
    LaurentSeries pref = apostol_prefactor(fp, 4);
    CHECK(pref.offset() == 0);
    CHECK(pref.at(0).constant_term() == Rational(1));
    CHECK(pref.at(1).constant_term() == Rational(-1, 2));
    CHECK(pref.at(2).constant_term() == Rational(1, 12));
    CHECK(pref.at(3).constant_term() == Rational(0));
    CHECK(pref.at(4).constant_term() == Rational(-1, 720));
    // n! * coefficients are the Bernoulli numbers
    CHECK(apostol_number(2, fp) == Rational(1, 6));
    CHECK(apostol_number(4, fp) == Rational(-1, 30));
}

TEST_CASE("apostol prefactor Euler-type constant term") {
    for (long lam_num : {2L, 3L, 5L}) {
        Rational lam(lam_num, 1);
        FamilyParams fp{0, Rational(-1), lam, 1, 2, 2};
        LaurentSeries pref = apostol_prefactor(fp, 2);
        CHECK(pref.at(0).constant_term() == Rational(2) / (lam + Rational(1)));
    }
    FamilyParams fp0{1, Rational(2), Rational(3), 0, 2, 2};
    CHECK(apostol_prefactor(fp0, 3) == LaurentSeries::one(VarSet::xyz(), 3));
}

TEST_CASE("uateghp_gf basics") {
    SUBCASE("Euler-type constant term is 1") {
        FamilyParams fp{0, Rational(-1), Rational(1), 1, 2, 2};
        CHECK(uateghp_gf(fp, 3).at(0) == C(Rational(1)));
    }
    SUBCASE("valuation k*alpha for B != A") {
        FamilyParams fp{1, Rational(1), Rational(2), 2, 2, 2};
        LaurentSeries gf = uateghp_gf(fp, 4);
        CHECK(gf.at(0).is_zero());
        CHECK(gf.at(1).is_zero());
        CHECK_FALSE(gf.at(2).is_zero());
    }
    SUBCASE("alpha = 0, n = 2 hand expansion") {
        FamilyParams fp{1, Rational(1), Rational(2), 0, 2, 2};
        MultiPoly p2 = uateghp_gf(fp, 2).at(2).scaled(rational_factorial(2));
        CHECK(p2 == X().pow(2) + Y().scaled(Rational(2)) + Z().scaled(Rational(2)));
        CHECK(p2 == uateghp_closed(2, fp));
    }
}

TEST_CASE("gould_hopper") {
    VarSet vxy = VarSet::of("x,y");
    CHECK(gould_hopper(1, 3) == MultiPoly::variable(vxy, "x"));
    CHECK(gould_hopper(0, 2) == MultiPoly::constant(vxy, Rational(1)));

    // oracle: n! [t^n] e^{xt+yt^2}
    LaurentSeries gf = LaurentSeries::exp_poly_arg(
        vxy, {{MultiPoly::variable(vxy, "x"), 1}, {MultiPoly::variable(vxy, "y"), 2}}, 6);
    for (long n = 0; n <= 6; ++n)
        CHECK(gould_hopper(n, 2) == gf.at(n).scaled(rational_factorial(n)));
    CHECK(gould_hopper(3, 2).to_string() == "x^3 + 6*x*y");
    CHECK(gould_hopper(2, 2).to_string() == "x^2 + 2*y");
}

TEST_CASE("trunc_exp") {
    VarSet vxz = VarSet::of("x,z");
    CHECK(trunc_exp(0, 3) == MultiPoly::constant(vxz, Rational(1)));
    CHECK(trunc_exp(1, 2) == MultiPoly::variable(vxz, "x"));

    // oracle: n! [t^n] e^{xt}/(1-zt^2)
    LaurentSeries expo = LaurentSeries::exp_poly_arg(vxz, {{MultiPoly::variable(vxz, "x"), 1}}, 6);
    LaurentSeries trunc = LaurentSeries::from_terms(
                              vxz, {{MultiPoly::constant(vxz, Rational(1)), 0},
                                    {-MultiPoly::variable(vxz, "z"), 2}}, 6)
                              .inverse();
    LaurentSeries gf = expo * trunc;
    for (long n = 0; n <= 6; ++n)
        CHECK(trunc_exp(n, 2) == gf.at(n).scaled(rational_factorial(n)));
    CHECK(trunc_exp(2, 2).to_string() == "x^2 + 2*z");
}

TEST_CASE("tegh_3v") {
    CHECK(tegh_3v(0, 2, 2) == C(Rational(1)));

    SUBCASE("GF extraction oracle") {
        for (long m : {1L, 2L, 3L})
            for (long r : {1L, 2L}) {
                LaurentSeries gf = tegh_gf_oracle(m, r, 7);
                for (long n = 0; n <= 7; ++n)
                    CHECK(tegh_3v(n, m, r) == gf.at(n).scaled(rational_factorial(n)));
            }
    }
    SUBCASE("slices collapse to the 2-variable families") {
        for (long n = 0; n <= 6; ++n) {
            CHECK(tegh_3v(n, 2, 3).evaluate_partial({{"y", Rational(0)}}) ==
                  trunc_exp(n, 3).extended_to(vxyz));
            CHECK(tegh_3v(n, 2, 3).evaluate_partial({{"z", Rational(0)}}) ==
                  gould_hopper(n, 2).extended_to(vxyz));
        }
    }
    SUBCASE("n=4, m=r=2 fixed value") {
        CHECK(tegh_3v(4, 2, 2).to_string() ==
              "x^4 + 12*x^2*y + 12*y^2 + 12*x^2*z + 24*y*z + 24*z^2");
    }
}

TEST_CASE("central equivalence: closed form vs GF extraction") {
    ParamSampler gen(31);
    for (int trial = 0; trial < 8; ++trial) {
        FamilyParams fp = sample_params(gen);
        LaurentSeries gf = uateghp_gf(fp, 12);
        for (long n = 0; n <= 12; ++n)
            CHECK(uateghp_closed(n, fp) == gf.at(n).scaled(rational_factorial(n)));
    }
}

TEST_CASE("central equivalence holds on the Laurent window too (B = A, k = 0)") {
    FamilyParams fp{0, Rational(2), Rational(2), 1, 2, 2};
    LaurentSeries gf = uateghp_gf(fp, 6);
    CHECK(gf.offset() == -1);
    for (long n = 0; n <= 6; ++n)
        CHECK(uateghp_closed(n, fp) == gf.at(n).scaled(rational_factorial(n)));
}

TEST_CASE("lowering recurrence d/dx P_n = n P_{n-1}") {
    ParamSampler gen(8);
    for (int trial = 0; trial < 4; ++trial) {
        FamilyParams fp = sample_params(gen);
        for (long n = 1; n <= 10; ++n)
            CHECK(uateghp_closed(n, fp).derivative("x") ==
                  uateghp_closed(n - 1, fp).scaled(Rational(n)));
    }
}

TEST_CASE("vanishing below k*alpha and x-leading coefficient") {
    FamilyParams fp{2, Rational(1), Rational(3), 2, 2, 2};
    for (long n = 0; n < fp.k * fp.alpha; ++n) CHECK(uateghp_closed(n, fp).is_zero());

    FamilyParams fk0{0, Rational(2), Rational(5), 2, 2, 3};
    LaurentSeries pref = apostol_prefactor(fk0, 0);
    for (long n = 0; n <= 8; ++n) {
        MultiPoly pn = uateghp_closed(n, fk0);
        CHECK(pn.degree_in("x") <= n);
        ExpVec lead = {static_cast<unsigned>(n), 0, 0};
        CHECK(pn.coeff(lead) == pref.at(0).constant_term());
    }
}

TEST_CASE("deleting a GF factor matches the y=0 / z=0 slices") {
    FamilyParams fp{1, Rational(1), Rational(3), 1, 2, 2};
    long N = 8;
    LaurentSeries pref = apostol_prefactor(fp, N);
    LaurentSeries no_y =
        (pref * LaurentSeries::exp_poly_arg(vxyz, {{X(), 1}}, N) *
         LaurentSeries::from_terms(vxyz, {{C(Rational(1)), 0}, {-Z(), fp.r}}, N).inverse())
            .truncated(N);
    LaurentSeries no_z =
        (pref * LaurentSeries::exp_poly_arg(vxyz, {{X(), 1}, {Y(), fp.m}}, N)).truncated(N);
    for (long n = 0; n <= N; ++n) {
        MultiPoly pn = uateghp_closed(n, fp);
        CHECK(pn.evaluate_partial({{"y", Rational(0)}}) == no_y.at(n).scaled(rational_factorial(n)));
        CHECK(pn.evaluate_partial({{"z", Rational(0)}}) == no_z.at(n).scaled(rational_factorial(n)));
    }
}

TEST_CASE("special-case reductions against from-scratch generating functions") {
    long N = 10;
    ParamSampler gen(55);
    for (int trial = 0; trial < 3; ++trial) {
        Rational lam = gen.small_rational();
        long alpha = gen.int_in(1, 2);
        long m = gen.int_in(1, 3), r = gen.int_in(1, 3);
        long work = N + 2 * alpha + 4;

        SpecialArgs sa;
        sa.alpha = alpha;
        sa.m = m;
        sa.r = r;

        // TEGHABP: (t/(lam e^t - 1))^alpha e^{xt+yt^m}/(1-zt^r)
        {
            std::vector<MultiPoly> dc;
            for (long j = 0; j <= work; ++j)
                dc.push_back(C(j == 0 ? lam - Rational(1) : lam / rational_factorial(j)));
            LaurentSeries den(vxyz, 0, work, std::move(dc));
            LaurentSeries gf = den.inverse().shifted(1).pow(alpha) * tegh_gf_oracle(m, r, work);
            for (long n = 0; n <= N; ++n)
                CHECK(reduce_special(FamilyId::TEGHABP, n, lam, sa) ==
                      gf.at(n).scaled(rational_factorial(n)));
        }
        // TEGHAEP: (2/(lam e^t + 1))^alpha ...
        if (lam != Rational(-1)) {
            std::vector<MultiPoly> dc;
            for (long j = 0; j <= work; ++j)
                dc.push_back(C(j == 0 ? lam + Rational(1) : lam / rational_factorial(j)));
            LaurentSeries den(vxyz, 0, work, std::move(dc));
            LaurentSeries gf = den.inverse().scaled(Rational(2)).pow(alpha) * tegh_gf_oracle(m, r, work);
            for (long n = 0; n <= N; ++n)
                CHECK(reduce_special(FamilyId::TEGHAEP, n, lam, sa) ==
                      gf.at(n).scaled(rational_factorial(n)));
        }
        // TEGHAGP: (2t/(lam e^t + 1))^alpha ...
        if (lam != Rational(-1)) {
            std::vector<MultiPoly> dc;
            for (long j = 0; j <= work; ++j)
                dc.push_back(C(j == 0 ? lam + Rational(1) : lam / rational_factorial(j)));
            LaurentSeries den(vxyz, 0, work, std::move(dc));
            LaurentSeries gf =
                den.inverse().scaled(Rational(2)).shifted(1).pow(alpha) * tegh_gf_oracle(m, r, work);
            for (long n = 0; n <= N; ++n)
                CHECK(reduce_special(FamilyId::TEGHAGP, n, lam, sa) ==
                      gf.at(n).scaled(rational_factorial(n)));
        }
    }
}

TEST_CASE("named reduction examples") {
    SpecialArgs sa;
    sa.alpha = 1;
    sa.m = 2;
    sa.r = 2;
    // classical Bernoulli polynomial B_1(x) = x - 1/2
    MultiPoly b1 = reduce_special(FamilyId::TEGHABP, 1, Rational(1), sa);
    CHECK(b1.evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}}) == X() - C(Rational(1, 2)));
    CHECK(reduce_special(FamilyId::TEGHAEP, 0, Rational(1), sa) == C(Rational(1)));
    CHECK(reduce_special(FamilyId::TEGHAGP, 0, Rational(1), sa).is_zero());
}

TEST_CASE("Hermite reduction and the 3-variable Hermite case") {
    SpecialArgs sa;
    sa.alpha = 1;
    sa.k = 0;
    sa.A = Rational(-1);
    sa.B = Rational(2);

    // TEHP3V is the m = r = 2 member
    FamilyParams fp{0, Rational(-1), Rational(2), 1, 2, 2};
    for (long n = 0; n <= 6; ++n)
        CHECK(reduce_special(FamilyId::TEHP3V, n, Rational(1), sa) == uateghp_closed(n, fp));

    // Hermite2V substitutes x -> 2x, y = -1, z = 1 in the m = r = 2 member
    for (long n = 0; n <= 6; ++n) {
        MultiPoly direct = uateghp_closed(n, fp)
                               .substitute_affine("x", Rational(2), Rational(0))
                               .evaluate_partial({{"y", Rational(-1)}, {"z", Rational(1)}});
        CHECK(reduce_special(FamilyId::Hermite2V, n, Rational(1), sa) == direct);
    }
}

TEST_CASE("unified Apostol polynomials agree with the x-only construction") {
    FamilyParams fp{1, Rational(1), Rational(2), 2, 1, 1};
    LaurentSeries gf = uateghp_gf(fp, 8);
    for (long n = 0; n <= 8; ++n) {
        MultiPoly viaxyz = gf.at(n).scaled(rational_factorial(n))
                               .evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}});
        CHECK(unified_apostol_poly(n, fp).extended_to(vxyz) == viaxyz);
    }
}
