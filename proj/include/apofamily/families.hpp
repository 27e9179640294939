#ifndef APOFAMILY_FAMILIES_HPP
#define APOFAMILY_FAMILIES_HPP

#include "apofamily/laurent.hpp"

namespace apofamily {

// One member of the unified family. The scalars a, b, beta of the generating
// function never appear individually: A = a^b and B = beta^b, so the
// denominator series is B*e^t - A and (beta/a)^b = B/A.
struct FamilyParams {
    long k = 1;
    Rational A = Rational(1);
    Rational B = Rational(1);
    long alpha = 1;
    long m = 2;
    long r = 2;

    void validate() const;
    // Valuation of B*e^t - A: 1 iff B = A, else 0.
    long denom_valuation() const { return B == A ? 1 : 0; }
    // Valuation of (2^{1-k} t^k / (B e^t - A))^alpha.
    long prefactor_offset() const { return alpha * (k - denom_valuation()); }
    Rational lambda() const { return B / A; }

    FamilyParams with_alpha(long a) const;
};

enum class FamilyId {
    UnifiedApostolP,
    UATyTEGHP,
    TEGHABP,
    TEGHAEP,
    TEGHAGP,
    TEHP3V,
    GouldHopper,
    TruncExp,
    TEGH3V,
    Hermite2V,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

// (2^{1-k} t^k / (B e^t - A))^alpha as a Laurent series through t^order,
// constant coefficients over the given variable set.
LaurentSeries apostol_prefactor(const FamilyParams& p, long order, const VarSet& vars = VarSet::xyz());

// prefactor * e^{x t + y t^m} / (1 - z t^r) over {x,y,z}; n!*[t^n] is the
// n-th polynomial of the family.
LaurentSeries uateghp_gf(const FamilyParams& p, long order);

// j!*[t^j] of the prefactor (x = 0 scalar values); zero below the offset.
Rational apostol_number(long j, const FamilyParams& p);

// Closed-form triple sum for the n-th polynomial; exactly matches
// n!*coefficient(uateghp_gf(p), n). Negative n gives zero.
MultiPoly uateghp_closed(long n, const FamilyParams& p);

// n! sum_{k<=n/m} y^k x^{n-mk} / (k! (n-mk)!), over {x,y}.
MultiPoly gould_hopper(long n, long m);

// n! sum_{k<=n/r} z^k x^{n-rk} / (n-rk)!, over {x,z}.
MultiPoly trunc_exp(long n, long r);

// Double sum over {x,y,z}; equals n!*[t^n] of e^{xt+yt^m}/(1-zt^r).
MultiPoly tegh_3v(long n, long m, long r);

// prefactor * e^{xt} family over {x}.
MultiPoly unified_apostol_poly(long n, const FamilyParams& p);

struct SpecialArgs {
    long alpha = 1;
    long m = 2;
    long r = 2;
    // Extra unified parameters, used by the tags that keep the full prefactor.
    long k = 1;
    Rational A = Rational(1);
    Rational B = Rational(1);
};

// Realizes the tag-to-parameter substitutions of the special cases.
MultiPoly reduce_special(FamilyId id, long n, const Rational& lambda, const SpecialArgs& args);

// FamilyParams for the three named Apostol reductions of lambda.
FamilyParams special_params(FamilyId id, const Rational& lambda, long alpha, long m, long r);

}  // namespace apofamily

#endif
