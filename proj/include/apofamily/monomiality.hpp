#ifndef APOFAMILY_MONOMIALITY_HPP
#define APOFAMILY_MONOMIALITY_HPP

#include "apofamily/families.hpp"

namespace apofamily {

// Raising/differential operators need (B e^d - A)^{-1} as a power series in
// d = d/dx, which requires B != A.
struct UnsupportedOperatorDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite operator expansion in powers of d/dx, exact on polynomials whose
// x-degree is at most degree_bound (d/dx is nilpotent there, so every series
// in d/dx truncates without loss).
class DiffOperator {
  public:
    struct Term {
        MultiPoly mult;        // left multiplier applied after differentiating
        long dpow = 0;         // power of d/dx
        bool premul_x = false; // multiply by x after the derivative
        bool antider = false;  // formal antiderivative (zero constant), k/dx slot
    };

    DiffOperator(VarSet vars, long degree_bound) : vars_(std::move(vars)), bound_(degree_bound) {}

    void add(Term t) { terms_.push_back(std::move(t)); }
    long degree_bound() const { return bound_; }

    MultiPoly apply(const MultiPoly& p) const;

  private:
    VarSet vars_;
    long bound_;
    std::vector<Term> terms_;
};

// d/dx, exact for every family and degree.
MultiPoly lowering(const MultiPoly& p);

// Multiplicative operator of the unified family:
//   x + m y d^{m-1} - r z d^{r-1}/(1 - z d^r) + alpha k/d - alpha B e^d/(B e^d - A).
// The 1/d slot uses the zero-constant antiderivative convention; results that
// exercise it (k != 0) are convention-dependent.
DiffOperator raising_operator(const FamilyParams& fp, long degree_bound);
MultiPoly raising(const MultiPoly& p, const FamilyParams& fp, long degree_bound);

// Residual of the differential equation
//   (x d + m y d^m + alpha k - r z d^r/(1 - z d^r) - alpha B e^d d/(B e^d - A) - n) P_n = 0.
// Expected to be the zero polynomial whenever B != A.
MultiPoly diffeq_residual(long n, const FamilyParams& fp);

}  // namespace apofamily

#endif
