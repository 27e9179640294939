#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "apofamily/auxiliary.hpp"
#include "apofamily/identities.hpp"

using namespace apofamily;

namespace {

// Brute-force count of set partitions of {1..n} into exactly k nonempty
// blocks, by explicit enumeration of block assignments.
long partitions_into_blocks(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<long> assign(static_cast<std::size_t>(n), 0);
    long count = 0;
    // element i may open a new block or join an existing one
    std::function<void(long, long)> rec = [&](long i, long used) {
        if (i == n) {
            if (used == k) ++count;
            return;
        }
        for (long b = 0; b < used; ++b) {
            assign[static_cast<std::size_t>(i)] = b;
            rec(i + 1, used);
        }
        assign[static_cast<std::size_t>(i)] = used;
        rec(i + 1, used + 1);
    };
    rec(0, 0);
    return count;
}

// Alternating-sum oracle: S(n, nu; lambda) = (1/nu!) sum_i C(nu,i)(-1)^{nu-i} lambda^i i^n.
Rational stirling_lambda_oracle(long n, long nu, const Rational& lambda) {
    Rational acc(0);
    for (long i = 0; i <= nu; ++i) {
        Rational in = i == 0 ? Rational(n == 0 ? 1 : 0) : Rational(i).pow(n);
        acc += rational_binomial(nu, i) * Rational((nu - i) % 2 == 0 ? 1 : -1) * lambda.pow(i) * in;
    }
    return acc / rational_factorial(nu);
}

}  // namespace

TEST_CASE("array type polynomials") {
    VarSet vx = VarSet::of("x");
    SUBCASE("nu = 0 gives x^n") {
        for (long n = 0; n <= 5; ++n)
            CHECK(array_type_poly(n, 0, Rational(3, 2)) == MultiPoly::variable(vx, "x").pow(n));
    }
    SUBCASE("lambda-Stirling numbers at lambda = 1 count set partitions") {
        CHECK(lambda_stirling(0, 1, Rational(1)) == Rational(0));
        for (long n = 1; n <= 6; ++n) CHECK(lambda_stirling(n, 1, Rational(1)) == Rational(1));
        CHECK(lambda_stirling(3, 2, Rational(1)) == Rational(partitions_into_blocks(3, 2)));
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(lambda_stirling(n, k, Rational(1)) == Rational(partitions_into_blocks(n, k)));
    }
    SUBCASE("alternating-sum oracle at general lambda") {
        Rational lam(3, 5);
        for (long n = 0; n <= 6; ++n)
            for (long nu = 0; nu <= 4; ++nu)
                CHECK(lambda_stirling(n, nu, lam) == stirling_lambda_oracle(n, nu, lam));
    }
    SUBCASE("S(0,0;lambda) = 1 and S(1,1;lambda) = lambda") {
        CHECK(lambda_stirling(0, 0, Rational(7, 3)) == Rational(1));
        CHECK(lambda_stirling(1, 1, Rational(7, 3)) == Rational(7, 3));
    }
    SUBCASE("binomial shift property") {
        VarSet vxs = VarSet::of("x");
        Rational lam(-2, 3);
        for (long n = 0; n <= 5; ++n) {
            MultiPoly expect = MultiPoly::zero(vxs);
            for (long j = 0; j <= n; ++j)
                expect += MultiPoly::variable(vxs, "x").pow(j).scaled(
                    rational_binomial(n, j) * lambda_stirling(n - j, 2, lam));
            CHECK(array_type_poly(n, 2, lam) == expect);
        }
    }
}

TEST_CASE("hurwitz_lerch") {
    Rational eps(Integer(1), Integer("1000000000000000000000000000000"));
    SUBCASE("w = 0 collapses to x^{-s}") {
        ZetaResult r = hurwitz_lerch({1, Rational(0), 3, Rational(2), eps});
        CHECK(r.value == Rational(1, 8));
        CHECK(r.tail_bound == Rational(0));
    }
    SUBCASE("geometric series value 2 within eps") {
        ZetaResult r = hurwitz_lerch({1, Rational(1, 2), 0, Rational(5), eps});
        CHECK((r.value - Rational(2)).abs() <= r.tail_bound);
        CHECK(r.tail_bound <= eps);
    }
    SUBCASE("mu=2, s=-1, w=1/3, x=1: closed form (1+w)/(1-w)^3") {
        // oracle: sum (n+1)^2 w^n = (1+w)/(1-w)^3 = 9/2 at w = 1/3
        Rational w(1, 3);
        Rational closed = (Rational(1) + w) / (Rational(1) - w).pow(3);
        CHECK(closed == Rational(9, 2));
        ZetaResult r = hurwitz_lerch({2, w, -1, Rational(1), eps});
        CHECK((r.value - closed).abs() <= r.tail_bound);
        CHECK(r.tail_bound <= eps);
    }
    SUBCASE("negative w alternating") {
        // sum (-1/2)^n = 2/3
        ZetaResult r = hurwitz_lerch({1, Rational(-1, 2), 0, Rational(1), eps});
        CHECK((r.value - Rational(2, 3)).abs() <= r.tail_bound);
    }
    SUBCASE("divergent domain rejected") {
        CHECK_THROWS_AS(hurwitz_lerch({1, Rational(1), 0, Rational(1), eps}), DivergentQuery);
        CHECK_THROWS_AS(hurwitz_lerch({1, Rational(-3, 2), 0, Rational(1), eps}), DivergentQuery);
    }
    SUBCASE("halving eps never moves the value by more than the old bound") {
        ZetaQuery q{2, Rational(2, 5), -2, Rational(3, 2), Rational(1, 1000000)};
        ZetaResult coarse = hurwitz_lerch(q);
        q.eps = q.eps / Rational(2);
        ZetaResult fine = hurwitz_lerch(q);
        CHECK((coarse.value - fine.value).abs() <= coarse.tail_bound);
    }
}

TEST_CASE("power sums") {
    SUBCASE("printed and geometric coincide at lambda = 1 with brute force") {
        for (long k = 0; k <= 6; ++k)
            for (long n = 0; n <= 6; ++n) {
                Rational brute(0);
                for (long i = 0; i <= n; ++i)
                    brute += i == 0 ? Rational(k == 0 ? 1 : 0) : Rational(i).pow(k);
                CHECK(power_sum_S(k, n, Rational(1), PowerSumForm::printed) == brute);
                CHECK(power_sum_S(k, n, Rational(1), PowerSumForm::geometric) == brute);
            }
        CHECK(power_sum_S(2, 3, Rational(1), PowerSumForm::geometric) == Rational(14));
    }
    SUBCASE("k = 0 at lambda = 1 counts terms") {
        for (long n = 0; n <= 5; ++n)
            CHECK(power_sum_S(0, n, Rational(1), PowerSumForm::printed) == Rational(n + 1));
    }
    SUBCASE("printed form at n = 0 is delta_{k,0}") {
        for (long k = 0; k <= 4; ++k)
            CHECK(power_sum_S(k, 0, Rational(5, 3), PowerSumForm::printed) ==
                  Rational(k == 0 ? 1 : 0));
    }
    SUBCASE("geometric form weights by lambda^i") {
        Rational lam(2, 3);
        for (long k = 0; k <= 4; ++k)
            for (long n = 0; n <= 5; ++n) {
                Rational brute(0);
                for (long i = 0; i <= n; ++i)
                    brute += lam.pow(i) * (i == 0 ? Rational(k == 0 ? 1 : 0) : Rational(i).pow(k));
                CHECK(power_sum_S(k, n, lam, PowerSumForm::geometric) == brute);
            }
    }
}

TEST_CASE("multiple power sums W_n") {
    SUBCASE("m = 1 collapses the ratio to 1") {
        Rational lam(3, 4);
        for (long l = 1; l <= 3; ++l) {
            CHECK(multi_power_sum_combo(0, 1, lam, l) == lam.pow(l));
            for (long n = 1; n <= 5; ++n) CHECK(multi_power_sum_combo(n, 1, lam, l) == Rational(0));
        }
    }
    SUBCASE("lambda = 1, l = 1 gives plain power sums") {
        for (long m = 1; m <= 4; ++m)
            for (long n = 0; n <= 5; ++n) {
                Rational brute(0);
                for (long i = 0; i < m; ++i)
                    brute += i == 0 ? Rational(n == 0 ? 1 : 0) : Rational(i).pow(n);
                CHECK(multi_power_sum_combo(n, m, Rational(1), 1) == brute);
            }
    }
    SUBCASE("W_0 = lambda^l ((1-lambda^m)/(1-lambda))^l") {
        Rational lam(2, 5);
        for (long m = 1; m <= 3; ++m)
            for (long l = 1; l <= 3; ++l) {
                Rational expect =
                    lam.pow(l) * ((Rational(1) - lam.pow(m)) / (Rational(1) - lam)).pow(l);
                CHECK(multi_power_sum_combo(0, m, lam, l) == expect);
            }
    }
    SUBCASE("finite-geometric-power oracle") {
        // ((1 - l^m e^{mt})/(1 - l e^t))^l = (sum_{i<m} (l e^t)^i)^l, so
        // W_n = l^l n! [t^n] of that finite power.
        Rational lam(-1, 2);
        long m = 3, l = 2;
        VarSet vx = VarSet::of("x");
        LaurentSeries geo = LaurentSeries::zero(vx, 8);
        for (long i = 0; i < m; ++i) {
            std::vector<MultiPoly> cs;
            for (long n = 0; n <= 8; ++n)
                cs.push_back(MultiPoly::constant(
                    vx, lam.pow(i) * Rational(i).pow(n) *
                            (i == 0 ? Rational(n == 0 ? 1 : 0) : Rational(1)) / rational_factorial(n)));
            geo = geo + LaurentSeries(vx, 0, 8, std::move(cs));
        }
        LaurentSeries powed = geo.pow(l);
        for (long n = 0; n <= 6; ++n)
            CHECK(multi_power_sum_combo(n, m, lam, l) ==
                  powed.at(n).constant_term() * rational_factorial(n) * lam.pow(l));
    }
}

TEST_CASE("multinomial compositions") {
    SUBCASE("s = 1 has the single empty composition") {
        auto comps = multinomial_compositions(1, 4);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].nu.empty());
        CHECK(comps[0].coeff == 1);
        CHECK(comps[0].ell == 0);
    }
    SUBCASE("s = 2, alpha = 2 is the binomial row 1,2,1") {
        auto comps = multinomial_compositions(2, 2);
        REQUIRE(comps.size() == 3);
        CHECK(comps[0].nu == std::vector<long>{0});
        CHECK(comps[0].coeff == 1);
        CHECK(comps[0].ell == 0);
        CHECK(comps[1].coeff == 2);
        CHECK(comps[1].ell == 1);
        CHECK(comps[2].coeff == 1);
        CHECK(comps[2].ell == 2);
    }
    SUBCASE("coefficients sum to s^alpha") {
        for (long s = 1; s <= 4; ++s)
            for (long alpha = 0; alpha <= 4; ++alpha) {
                Integer total(0);
                for (const auto& c : multinomial_compositions(s, alpha)) total += c.coeff;
                Integer expect;
                mpz_pow_ui(expect.get_mpz_t(), Integer(s).get_mpz_t(),
                           static_cast<unsigned long>(alpha));
                CHECK(total == expect);
            }
    }
    SUBCASE("exact compositions sum their slots to alpha") {
        auto comps = multinomial_compositions_exact(3, 2);
        for (const auto& c : comps) {
            long sum = 0;
            for (long v : c.nu) sum += v;
            CHECK(sum == 2);
        }
        REQUIRE(comps.size() == 3);  // (0,2),(1,1),(2,0)
    }
}
