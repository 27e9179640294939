#include "apofamily/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace apofamily {

LaurentSeries::LaurentSeries(VarSet vars, long offset, long order, std::vector<MultiPoly> coeffs)
    : vars_(std::move(vars)), offset_(offset), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < offset_) throw SeriesError("LaurentSeries: order below offset");
    if (static_cast<long>(coeffs_.size()) != order_ - offset_ + 1)
        throw SeriesError("LaurentSeries: window size mismatch");
    for (const auto& c : coeffs_)
        if (c.vars() != vars_) throw SeriesError("LaurentSeries: coefficient variable set mismatch");
}

LaurentSeries LaurentSeries::zero(const VarSet& vars, long order) {
    return LaurentSeries(vars, 0, order,
                         std::vector<MultiPoly>(static_cast<std::size_t>(order + 1), MultiPoly::zero(vars)));
}

LaurentSeries LaurentSeries::one(const VarSet& vars, long order) {
    LaurentSeries s = zero(vars, order);
    s.coeffs_[0] = MultiPoly::constant(vars, Rational(1));
    return s;
}

LaurentSeries LaurentSeries::from_terms(const VarSet& vars,
                                        const std::vector<std::pair<MultiPoly, long>>& terms,
                                        long order) {
    long lo = 0;
    for (const auto& [c, p] : terms) lo = std::min(lo, p);
    LaurentSeries s(vars, lo, std::max(order, lo),
                    std::vector<MultiPoly>(static_cast<std::size_t>(std::max(order, lo) - lo + 1),
                                           MultiPoly::zero(vars)));
    for (const auto& [c, p] : terms) {
        if (p > order) throw SeriesError("from_terms: term beyond requested order");
        s.coeffs_[static_cast<std::size_t>(p - lo)] += c.extended_to(vars);
    }
    return s;
}

LaurentSeries LaurentSeries::exp_poly_arg(const VarSet& vars,
                                          const std::vector<std::pair<MultiPoly, long>>& arg,
                                          long order) {
    for (const auto& [c, p] : arg)
        if (p <= 0) throw NonPositiveValuation("exp_poly_arg: argument term with power <= 0");

    // Argument coefficients a_1..a_order.
    std::vector<MultiPoly> a(static_cast<std::size_t>(order) + 1, MultiPoly::zero(vars));
    for (const auto& [c, p] : arg)
        if (p <= order) a[static_cast<std::size_t>(p)] += c.extended_to(vars);

    // E' = A'·E  gives  n·E_n = sum_{j=1..n} j·a_j·E_{n-j}.
    std::vector<MultiPoly> e(static_cast<std::size_t>(order) + 1, MultiPoly::zero(vars));
    e[0] = MultiPoly::constant(vars, Rational(1));
    for (long n = 1; n <= order; ++n) {
        MultiPoly acc = MultiPoly::zero(vars);
        for (long j = 1; j <= n; ++j) {
            if (a[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += a[static_cast<std::size_t>(j)].scaled(Rational(j)) * e[static_cast<std::size_t>(n - j)];
        }
        e[static_cast<std::size_t>(n)] = acc.scaled(Rational(1, n));
    }
    return LaurentSeries(vars, 0, order, std::move(e));
}

const MultiPoly& LaurentSeries::coefficient(long n) const {
    if (n < offset_ || n > order_)
        throw OutOfOrder("coefficient: t^" + std::to_string(n) + " outside known window [" +
                         std::to_string(offset_) + ", " + std::to_string(order_) + "]");
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

MultiPoly LaurentSeries::at(long n) const {
    if (n > order_)
        throw OutOfOrder("at: t^" + std::to_string(n) + " beyond truncation order " + std::to_string(order_));
    if (n < offset_) return MultiPoly::zero(vars_);
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

std::optional<long> LaurentSeries::valuation() const {
    for (long n = offset_; n <= order_; ++n)
        if (!coeffs_[static_cast<std::size_t>(n - offset_)].is_zero()) return n;
    return std::nullopt;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.vars_ != b.vars_) throw SeriesError("series add: variable set mismatch");
    long offset = std::min(a.offset_, b.offset_);
    long order = std::min(a.order_, b.order_);
    if (order < offset) throw SeriesError("series add: empty joint window");
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order - offset + 1));
    for (long n = offset; n <= order; ++n) coeffs.push_back(a.at(n) + b.at(n));
    return LaurentSeries(a.vars_, offset, order, std::move(coeffs));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.vars_ != b.vars_) throw SeriesError("series mul: variable set mismatch");
    long offset = a.offset_ + b.offset_;
    long order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
    if (order < offset) throw SeriesError("series mul: empty joint window");
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(order - offset + 1), MultiPoly::zero(a.vars_));
    for (long i = a.offset_; i <= a.order_; ++i) {
        const MultiPoly& ca = a.coeffs_[static_cast<std::size_t>(i - a.offset_)];
        if (ca.is_zero()) continue;
        long jmax = std::min(b.order_, order - i);
        for (long j = b.offset_; j <= jmax; ++j) {
            const MultiPoly& cb = b.coeffs_[static_cast<std::size_t>(j - b.offset_)];
            if (cb.is_zero()) continue;
            coeffs[static_cast<std::size_t>(i + j - offset)] += ca * cb;
        }
    }
    return LaurentSeries(a.vars_, offset, order, std::move(coeffs));
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries s = *this;
    for (auto& p : s.coeffs_) p = p.scaled(c);
    return s;
}

LaurentSeries LaurentSeries::scaled(const MultiPoly& c) const {
    LaurentSeries s = *this;
    MultiPoly m = c.extended_to(vars_);
    for (auto& p : s.coeffs_) p = p * m;
    return s;
}

LaurentSeries LaurentSeries::shifted(long j) const {
    LaurentSeries s = *this;
    s.offset_ += j;
    s.order_ += j;
    return s;
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
    if (new_order > order_) throw OutOfOrder("truncated: cannot extend known window");
    long offset = std::min(offset_, new_order);
    std::vector<MultiPoly> coeffs;
    for (long n = offset; n <= new_order; ++n) coeffs.push_back(at(n));
    return LaurentSeries(vars_, offset, new_order, std::move(coeffs));
}

LaurentSeries LaurentSeries::inverse() const {
    auto v = valuation();
    if (!v) throw NonUnitLeading("inverse: series is zero through its known order");
    const MultiPoly& lead = coeffs_[static_cast<std::size_t>(*v - offset_)];
    if (!lead.is_constant()) throw NonUnitLeading("inverse: leading coefficient is not a constant");
    Rational c = lead.constant_term();

    // f = c·t^v·(1 + h), solve g·f = 1 by triangular recurrence.
    long len = order_ - *v;  // h known through t^len
    std::vector<MultiPoly> g(static_cast<std::size_t>(len) + 1, MultiPoly::zero(vars_));
    g[0] = MultiPoly::constant(vars_, Rational(1) / c);
    for (long n = 1; n <= len; ++n) {
        MultiPoly acc = MultiPoly::zero(vars_);
        for (long i = 1; i <= n; ++i) acc += at(*v + i) * g[static_cast<std::size_t>(n - i)];
        g[static_cast<std::size_t>(n)] = acc.scaled(Rational(-1) / c);
    }
    return LaurentSeries(vars_, -*v, -*v + len, std::move(g));
}

LaurentSeries LaurentSeries::pow(long e) const {
    if (e == 0) return one(vars_, std::max(order_, 0L));
    LaurentSeries base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    LaurentSeries r = base;
    n -= 1;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

LaurentSeries LaurentSeries::rescale_t(const Rational& c) const {
    if (c.is_zero() && offset_ < 0) throw SeriesError("rescale_t: zero scale on a series with a pole");
    LaurentSeries s = *this;
    for (long n = offset_; n <= order_; ++n)
        s.coeffs_[static_cast<std::size_t>(n - offset_)] =
            s.coeffs_[static_cast<std::size_t>(n - offset_)].scaled(c.is_zero() ? Rational(n == 0 ? 1 : 0)
                                                                                : c.pow(n));
    return s;
}

LaurentSeries LaurentSeries::derivative_coeffwise(const std::string& var) const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = c.derivative(var);
    return s;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.vars_ != b.vars_) return false;
    long lo = std::min(a.offset_, b.offset_);
    long hi = std::min(a.order_, b.order_);
    for (long n = lo; n <= hi; ++n)
        if (a.at(n) != b.at(n)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (long n = offset_; n <= order_; ++n) {
        const MultiPoly& c = coeffs_[static_cast<std::size_t>(n - offset_)];
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << "(" << c.to_string() << ")*t^" << n;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) { return f * g; }
LaurentSeries series_div(const LaurentSeries& f, const LaurentSeries& g) { return f * g.inverse(); }
LaurentSeries series_inverse(const LaurentSeries& f) { return f.inverse(); }
LaurentSeries series_pow(const LaurentSeries& f, long e) { return f.pow(e); }
LaurentSeries series_exp_poly_arg(const VarSet& vars,
                                  const std::vector<std::pair<MultiPoly, long>>& arg, long order) {
    return LaurentSeries::exp_poly_arg(vars, arg, order);
}
LaurentSeries series_rescale_t(const LaurentSeries& f, const Rational& c) { return f.rescale_t(c); }
MultiPoly coefficient(const LaurentSeries& f, long n) { return f.coefficient(n); }

}  // namespace apofamily
