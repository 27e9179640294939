#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apofamily/identities.hpp"
#include "apofamily/monomiality.hpp"

using namespace apofamily;

namespace {

const VarSet vxyz = VarSet::xyz();
MultiPoly X() { return MultiPoly::variable(vxyz, "x"); }

}  // namespace

TEST_CASE("lowering is d/dx") {
    CHECK(lowering(X().pow(3)) == X().pow(2).scaled(Rational(3)));
    CHECK(lowering(MultiPoly::constant(vxyz, Rational(9))).is_zero());
}

TEST_CASE("lowering on family polynomials gives n P_{n-1} for every family") {
    ParamSampler gen(17);
    for (int trial = 0; trial < 5; ++trial) {
        FamilyParams fp;
        fp.k = gen.int_in(0, 2);
        fp.alpha = gen.int_in(-1, 2);
        fp.m = gen.int_in(1, 3);
        fp.r = gen.int_in(1, 3);
        fp.A = gen.small_rational();
        fp.B = gen.small_rational();
        for (long n = 1; n <= 10; ++n)
            CHECK(lowering(uateghp_closed(n, fp)) == uateghp_closed(n - 1, fp).scaled(Rational(n)));
    }
}

TEST_CASE("raising reduces to multiplication by x when alpha = 0, y = z = 0") {
    FamilyParams fp{0, Rational(-1), Rational(2), 0, 2, 2};
    for (long n = 0; n <= 5; ++n) {
        MultiPoly xn = X().pow(n);
        MultiPoly up = raising(xn, fp, n + 2);
        CHECK(up.evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}}) == X().pow(n + 1));
    }
}

TEST_CASE("raising maps P_n to P_{n+1} for k = 0 families") {
    ParamSampler gen(23);
    for (int trial = 0; trial < 4; ++trial) {
        FamilyParams fp;
        fp.k = 0;
        fp.alpha = gen.int_in(1, 2);
        fp.m = gen.int_in(1, 3);
        fp.r = gen.int_in(1, 3);
        fp.A = gen.small_rational();
        do {
            fp.B = gen.small_rational();
        } while (fp.B == fp.A);
        for (long n = 0; n <= 8; ++n)
            CHECK(raising(uateghp_closed(n, fp), fp, n + 1) == uateghp_closed(n + 1, fp));
    }
}

TEST_CASE("Euler-type x-slice raising example") {
    // k=0 Euler-type with y = z = 0: operator is x - lam e^d/(lam e^d + 1)
    FamilyParams fp{0, Rational(-1), Rational(3), 1, 2, 2};
    for (long n = 0; n <= 8; ++n) {
        MultiPoly en = uateghp_closed(n, fp).evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}});
        MultiPoly up = raising(en, fp, n + 1).evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}});
        MultiPoly want =
            uateghp_closed(n + 1, fp).evaluate_partial({{"y", Rational(0)}, {"z", Rational(0)}});
        CHECK(up == want);
    }
}

TEST_CASE("composition raising-then-lowering is multiplication by n (k = 0)") {
    FamilyParams fp{0, Rational(-1), Rational(2), 1, 3, 2};
    for (long n = 0; n <= 8; ++n) {
        MultiPoly pn = uateghp_closed(n, fp);
        CHECK(raising(lowering(pn), fp, n + 1) == pn.scaled(Rational(n)));
    }
}

TEST_CASE("operator truncation is stable above the degree bound") {
    FamilyParams fp{0, Rational(1), Rational(4), 2, 2, 3};
    MultiPoly p = uateghp_closed(5, fp);
    CHECK(raising(p, fp, 5) == raising(p, fp, 9));
}

TEST_CASE("differential equation residual vanishes for B != A") {
    SUBCASE("Euler operator on monomials: alpha = 0, y = z = 0 slice") {
        FamilyParams fp{0, Rational(-1), Rational(2), 0, 2, 2};
        for (long n = 0; n <= 6; ++n) {
            MultiPoly res = diffeq_residual(n, fp);
            // alpha = 0 family is the 3VTEGHP; residual must vanish
            CHECK(res.is_zero());
        }
    }
    SUBCASE("Euler-type k = 0, alpha = 1") {
        FamilyParams fp{0, Rational(-1), Rational(2), 1, 2, 2};
        for (long n = 0; n <= 8; ++n) CHECK(diffeq_residual(n, fp).is_zero());
    }
    SUBCASE("order-2 and k = 1 cases") {
        FamilyParams a{0, Rational(2), Rational(-3), 2, 3, 2};
        FamilyParams b{1, Rational(1), Rational(2), 1, 2, 2};
        for (long n = 0; n <= 6; ++n) {
            CHECK(diffeq_residual(n, a).is_zero());
            CHECK(diffeq_residual(n, b).is_zero());
        }
    }
}

TEST_CASE("B = A is rejected for operator domains") {
    FamilyParams fp{1, Rational(1), Rational(1), 1, 2, 2};
    CHECK_THROWS_AS(raising(X(), fp, 3), UnsupportedOperatorDomain);
    CHECK_THROWS_AS(diffeq_residual(2, fp), UnsupportedOperatorDomain);
}
