#ifndef APOFAMILY_MULTIPOLY_HPP
#define APOFAMILY_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apofamily/rational.hpp"

namespace apofamily {

// Ordered set of formal variable names, a subset of {x, y, z, X, Y, Z}.
// The order is fixed at construction and defines exponent-vector layout.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names);

    static VarSet of(const std::string& comma_separated);  // e.g. "x,y,z"
    static VarSet xyz() { return of("x,y,z"); }
    static VarSet xyzXYZ() { return of("x,y,z,X,Y,Z"); }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& v) const;
    bool contains(const std::string& v) const { return index_of(v).has_value(); }

    // Union in the canonical order x < y < z < X < Y < Z.
    static VarSet merged(const VarSet& a, const VarSet& b);

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

  private:
    std::vector<std::string> names_;
};

using ExpVec = std::vector<unsigned>;

// Display / storage order for terms: later variables ascending, ties broken by
// the first variable descending. Reproduces e.g. x^4 + 12*x^2*y + 12*y^2 +
// 12*x^2*z + 24*y*z + 24*z^2.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Rational. No zero coefficients are ever
// stored; the zero polynomial is the empty term map.
class MultiPoly {
  public:
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(const VarSet& vars) { return MultiPoly(vars); }
    static MultiPoly constant(const VarSet& vars, const Rational& c);
    static MultiPoly variable(const VarSet& vars, const std::string& name);
    static MultiPoly monomial(const VarSet& vars, const ExpVec& exps, const Rational& c);

    const VarSet& vars() const { return vars_; }
    const std::map<ExpVec, Rational, TermOrder>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const ExpVec& exps) const;
    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(long e) const;  // e >= 0

    MultiPoly derivative(const std::string& var) const;
    // Formal antiderivative with zero constant term in `var`.
    MultiPoly antiderivative(const std::string& var) const;

    // Simultaneous substitution var -> polynomial for every listed variable.
    MultiPoly substitute(const std::vector<std::pair<std::string, MultiPoly>>& subs) const;
    // var -> scale*var + shift, in place of the same variable.
    MultiPoly substitute_affine(const std::string& var, const Rational& scale,
                                const Rational& shift) const;
    // Substitute constants for a subset of variables.
    MultiPoly evaluate_partial(const std::vector<std::pair<std::string, Rational>>& point) const;
    // Substitute constants for all variables.
    Rational evaluate(const std::vector<std::pair<std::string, Rational>>& point) const;

    // Re-express over a superset of the variables (canonical merged order).
    MultiPoly extended_to(const VarSet& vars) const;

    // Largest absolute coefficient value, 0 for the zero polynomial.
    Rational max_abs_coeff() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Canonical term list, e.g. "x^3 + 6*x*y", "x - 1/2", "0".
    std::string to_string() const;

  private:
    void insert_term(const ExpVec& exps, const Rational& c);

    VarSet vars_;
    std::map<ExpVec, Rational, TermOrder> terms_;
};

// Arithmetic over mergeable variable sets, per the operation table.
enum class PolyOp { add, sub, mul, scale };
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);

}  // namespace apofamily

#endif
