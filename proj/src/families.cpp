#include "apofamily/families.hpp"

#include <algorithm>

namespace apofamily {

void FamilyParams::validate() const {
    if (k < 0) throw std::invalid_argument("FamilyParams: k must be >= 0");
    if (A.is_zero()) throw std::invalid_argument("FamilyParams: A must be nonzero");
    if (m < 1) throw std::invalid_argument("FamilyParams: m must be >= 1");
    if (r < 1) throw std::invalid_argument("FamilyParams: r must be >= 1");
}

FamilyParams FamilyParams::with_alpha(long a) const {
    FamilyParams q = *this;
    q.alpha = a;
    return q;
}

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::UnifiedApostolP: return "unified-apostol";
        case FamilyId::UATyTEGHP: return "uateghp";
        case FamilyId::TEGHABP: return "teghabp";
        case FamilyId::TEGHAEP: return "teghaep";
        case FamilyId::TEGHAGP: return "teghagp";
        case FamilyId::TEHP3V: return "tehp3v";
        case FamilyId::GouldHopper: return "gould-hopper";
        case FamilyId::TruncExp: return "trunc-exp";
        case FamilyId::TEGH3V: return "tegh3v";
        case FamilyId::Hermite2V: return "hermite2v";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (FamilyId id : {FamilyId::UnifiedApostolP, FamilyId::UATyTEGHP, FamilyId::TEGHABP,
                        FamilyId::TEGHAEP, FamilyId::TEGHAGP, FamilyId::TEHP3V, FamilyId::GouldHopper,
                        FamilyId::TruncExp, FamilyId::TEGH3V, FamilyId::Hermite2V})
        if (name == family_name(id)) return id;
    return std::nullopt;
}

LaurentSeries apostol_prefactor(const FamilyParams& p, long order, const VarSet& vars) {
    p.validate();
    long v = p.denom_valuation();
    // Work far enough above `order` that the |alpha| inversions/products do
    // not truncate below it.
    long amag = p.alpha < 0 ? -p.alpha : p.alpha;
    long work = order + (amag + 1) * (std::max(p.k, 2L) + 2) + 4;

    // D = B e^t - A.
    std::vector<MultiPoly> dc;
    for (long n = 0; n <= work; ++n)
        dc.push_back(MultiPoly::constant(vars, n == 0 ? p.B - p.A : p.B / rational_factorial(n)));
    LaurentSeries d(vars, 0, work, std::move(dc));
    (void)v;

    Rational two_pow = Rational(2).pow(1 - p.k);
    LaurentSeries base = d.inverse().scaled(two_pow).shifted(p.k);
    LaurentSeries pref = base.pow(p.alpha);
    return pref.truncated(std::min(pref.order(), std::max(order, pref.offset())));
}

LaurentSeries uateghp_gf(const FamilyParams& p, long order) {
    p.validate();
    const VarSet vars = VarSet::xyz();
    long pad = std::max(0L, -p.prefactor_offset());
    long work = order + pad;

    LaurentSeries pref = apostol_prefactor(p, work, vars);
    std::vector<std::pair<MultiPoly, long>> arg = {{MultiPoly::variable(vars, "x"), 1},
                                                   {MultiPoly::variable(vars, "y"), p.m}};
    LaurentSeries expo = LaurentSeries::exp_poly_arg(vars, arg, work);
    std::vector<std::pair<MultiPoly, long>> zterm = {
        {MultiPoly::constant(vars, Rational(1)), 0},
        {-MultiPoly::variable(vars, "z"), p.r}};
    LaurentSeries trunc = LaurentSeries::from_terms(vars, zterm, work).inverse();

    LaurentSeries gf = pref * expo * trunc;
    return gf.truncated(std::min(gf.order(), std::max(order, gf.offset())));
}

Rational apostol_number(long j, const FamilyParams& p) {
    LaurentSeries pref = apostol_prefactor(p, std::max(j, 0L), VarSet::of("x"));
    if (j < pref.offset()) return Rational(0);
    return pref.coefficient(j).constant_term() * rational_factorial(std::max(j, 0L));
}

namespace {

// Shared core of the closed form: the triple sum of the series expansion, fed
// with prefactor coefficients [t^j] for j in [pref.offset(), n].
MultiPoly closed_from_prefactor(long n, const FamilyParams& p, const LaurentSeries& pref) {
    const VarSet vars = VarSet::xyz();
    if (n < 0) return MultiPoly::zero(vars);
    MultiPoly acc = MultiPoly::zero(vars);
    long qmin = 0;
    long qmax = n - pref.offset();  // below the offset the prefactor vanishes
    for (long q = qmin; q <= qmax; ++q) {
        Rational pc = pref.at(n - q).constant_term();
        if (pc.is_zero()) continue;
        for (long i = 0; i <= q / p.r; ++i) {
            for (long l = 0; l <= (q - p.r * i) / p.m; ++l) {
                long xi = q - p.r * i - p.m * l;
                if (xi < 0) continue;
                Rational c = pc / (rational_factorial(l) * rational_factorial(xi));
                ExpVec e = {static_cast<unsigned>(xi), static_cast<unsigned>(l), static_cast<unsigned>(i)};
                acc += MultiPoly::monomial(vars, e, c);
            }
        }
    }
    return acc.scaled(rational_factorial(n));
}

}  // namespace

MultiPoly uateghp_closed(long n, const FamilyParams& p) {
    p.validate();
    if (n < 0) return MultiPoly::zero(VarSet::xyz());
    LaurentSeries pref = apostol_prefactor(p, n, VarSet::xyz());
    return closed_from_prefactor(n, p, pref);
}

MultiPoly gould_hopper(long n, long m) {
    if (m < 1) throw std::invalid_argument("gould_hopper: m must be >= 1");
    const VarSet vars = VarSet::of("x,y");
    if (n < 0) return MultiPoly::zero(vars);
    MultiPoly acc = MultiPoly::zero(vars);
    Rational nf = rational_factorial(n);
    for (long j = 0; j <= n / m; ++j) {
        long xi = n - m * j;
        Rational c = nf / (rational_factorial(j) * rational_factorial(xi));
        acc += MultiPoly::monomial(vars, {static_cast<unsigned>(xi), static_cast<unsigned>(j)}, c);
    }
    return acc;
}

MultiPoly trunc_exp(long n, long r) {
    if (r < 1) throw std::invalid_argument("trunc_exp: r must be >= 1");
    const VarSet vars = VarSet::of("x,z");
    if (n < 0) return MultiPoly::zero(vars);
    MultiPoly acc = MultiPoly::zero(vars);
    Rational nf = rational_factorial(n);
    for (long j = 0; j <= n / r; ++j) {
        long xi = n - r * j;
        Rational c = nf / rational_factorial(xi);
        acc += MultiPoly::monomial(vars, {static_cast<unsigned>(xi), static_cast<unsigned>(j)}, c);
    }
    return acc;
}

MultiPoly tegh_3v(long n, long m, long r) {
    if (m < 1 || r < 1) throw std::invalid_argument("tegh_3v: m and r must be >= 1");
    const VarSet vars = VarSet::xyz();
    if (n < 0) return MultiPoly::zero(vars);
    MultiPoly acc = MultiPoly::zero(vars);
    Rational nf = rational_factorial(n);
    for (long i = 0; i <= n / r; ++i) {
        for (long l = 0; l <= (n - r * i) / m; ++l) {
            long xi = n - r * i - m * l;
            Rational c = nf / (rational_factorial(l) * rational_factorial(xi));
            ExpVec e = {static_cast<unsigned>(xi), static_cast<unsigned>(l), static_cast<unsigned>(i)};
            acc += MultiPoly::monomial(vars, e, c);
        }
    }
    return acc;
}

MultiPoly unified_apostol_poly(long n, const FamilyParams& p) {
    const VarSet vars = VarSet::of("x");
    if (n < 0) return MultiPoly::zero(vars);
    LaurentSeries pref = apostol_prefactor(p, n, vars);
    MultiPoly acc = MultiPoly::zero(vars);
    for (long j = pref.offset(); j <= n; ++j) {
        Rational pc = pref.at(j).constant_term();
        if (pc.is_zero()) continue;
        long xi = n - j;
        acc += MultiPoly::monomial(vars, {static_cast<unsigned>(xi)}, pc / rational_factorial(xi));
    }
    return acc.scaled(rational_factorial(n));
}

FamilyParams special_params(FamilyId id, const Rational& lambda, long alpha, long m, long r) {
    FamilyParams p;
    p.alpha = alpha;
    p.m = m;
    p.r = r;
    switch (id) {
        case FamilyId::TEGHABP:
            p.k = 1;
            p.A = Rational(1);
            p.B = lambda;
            return p;
        case FamilyId::TEGHAEP:
            p.k = 0;
            p.A = Rational(-1);
            p.B = lambda;
            return p;
        case FamilyId::TEGHAGP:
            p.k = 1;
            p.A = Rational(-1, 2);
            p.B = lambda / Rational(2);
            return p;
        default:
            throw std::invalid_argument("special_params: tag has no lambda substitution");
    }
}

MultiPoly reduce_special(FamilyId id, long n, const Rational& lambda, const SpecialArgs& args) {
    switch (id) {
        case FamilyId::GouldHopper:
            return gould_hopper(n, args.m);
        case FamilyId::TruncExp:
            return trunc_exp(n, args.r);
        case FamilyId::TEGH3V:
            return tegh_3v(n, args.m, args.r);
        case FamilyId::TEGHABP:
        case FamilyId::TEGHAEP:
        case FamilyId::TEGHAGP:
            return uateghp_closed(n, special_params(id, lambda, args.alpha, args.m, args.r));
        case FamilyId::UnifiedApostolP: {
            FamilyParams p{args.k, args.A, args.B, args.alpha, 1, 1};
            return unified_apostol_poly(n, p);
        }
        case FamilyId::UATyTEGHP: {
            FamilyParams p{args.k, args.A, args.B, args.alpha, args.m, args.r};
            return uateghp_closed(n, p);
        }
        case FamilyId::TEHP3V: {
            FamilyParams p{args.k, args.A, args.B, args.alpha, 2, 2};
            return uateghp_closed(n, p);
        }
        case FamilyId::Hermite2V: {
            FamilyParams p{args.k, args.A, args.B, args.alpha, 2, 2};
            MultiPoly h = uateghp_closed(n, p);
            h = h.substitute_affine("x", Rational(2), Rational(0));
            return h.evaluate_partial({{"y", Rational(-1)}, {"z", Rational(1)}});
        }
    }
    throw std::invalid_argument("reduce_special: unknown family id");
}

}  // namespace apofamily
