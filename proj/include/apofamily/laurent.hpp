#ifndef APOFAMILY_LAURENT_HPP
#define APOFAMILY_LAURENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "apofamily/multipoly.hpp"

namespace apofamily {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Inversion requested on a series whose first nonzero coefficient is not a
// nonzero rational constant.
struct NonUnitLeading : SeriesError {
    using SeriesError::SeriesError;
};
// Coefficient requested outside the known window [offset, order].
struct OutOfOrder : SeriesError {
    using SeriesError::SeriesError;
};
// exp() of an argument that does not vanish at t = 0.
struct NonPositiveValuation : SeriesError {
    using SeriesError::SeriesError;
};

// Truncated Laurent series in one formal variable t with MultiPoly
// coefficients. Coefficients for t^offset .. t^order are stored; everything
// below offset is exactly zero, everything above order is unknown. Truncation
// is propagated pessimistically through every operation, and comparisons only
// ever look at jointly known ranges.
class LaurentSeries {
  public:
    LaurentSeries(VarSet vars, long offset, long order, std::vector<MultiPoly> coeffs);

    static LaurentSeries zero(const VarSet& vars, long order);
    static LaurentSeries one(const VarSet& vars, long order);
    // Finite sum of coef*t^power terms, known through `order`.
    static LaurentSeries from_terms(const VarSet& vars,
                                    const std::vector<std::pair<MultiPoly, long>>& terms, long order);
    // exp(sum coef_i * t^{m_i}) with every m_i >= 1, exact through `order`.
    static LaurentSeries exp_poly_arg(const VarSet& vars,
                                      const std::vector<std::pair<MultiPoly, long>>& arg, long order);

    const VarSet& vars() const { return vars_; }
    long offset() const { return offset_; }
    long order() const { return order_; }

    // Strict accessor: throws OutOfOrder outside [offset, order].
    const MultiPoly& coefficient(long n) const;
    // Zero below offset, throws above order.
    MultiPoly at(long n) const;
    // Index of the first nonzero stored coefficient, if any.
    std::optional<long> valuation() const;
    bool is_zero_through_order() const { return !valuation().has_value(); }

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(const Rational& c) const;
    LaurentSeries scaled(const MultiPoly& c) const;
    // Multiply by t^j.
    LaurentSeries shifted(long j) const;
    LaurentSeries truncated(long new_order) const;

    // Multiplicative inverse through the attainable order. The leading
    // coefficient must be a nonzero constant.
    LaurentSeries inverse() const;
    LaurentSeries pow(long e) const;

    // t -> c*t. For c = 0 the offset must be non-negative.
    LaurentSeries rescale_t(const Rational& c) const;

    // Coefficient-wise partial derivative.
    LaurentSeries derivative_coeffwise(const std::string& var) const;

    // Equality on the overlap of the known ranges.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    std::string to_string() const;

  private:
    VarSet vars_;
    long offset_;
    long order_;
    std::vector<MultiPoly> coeffs_;
};

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_div(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_inverse(const LaurentSeries& f);
LaurentSeries series_pow(const LaurentSeries& f, long e);
LaurentSeries series_exp_poly_arg(const VarSet& vars,
                                  const std::vector<std::pair<MultiPoly, long>>& arg, long order);
LaurentSeries series_rescale_t(const LaurentSeries& f, const Rational& c);
MultiPoly coefficient(const LaurentSeries& f, long n);

}  // namespace apofamily

#endif
