// riemann.hpp
//
// Desk-scale oracle for the rational field: certified Euler-Maclaurin
// evaluation of zeta and zeta', the explicit log-derivative representation
// of f(s) = sum over zeros of Re(2/(s - rho)), the zero-sum form of f with
// a rigorous tail, the smoothed Chebyshev sum psi1, and the weighted prime
// power sum with its explicit bound.

#pragma once

#include "zetabound/core.hpp"
#include "zetabound/zerodata.hpp"

#include <cstddef>
#include <vector>

namespace zetabound {

// Von Mangoldt values Lambda(n) for n <= limit, stored as log p at prime
// powers and 0 elsewhere.  Immutable after construction.
class PrimeTable {
  public:
    explicit PrimeTable(std::size_t limit);

    std::size_t limit() const { return limit_; }
    double mangoldt(std::size_t n) const {
        if (n > limit_) throw RangeError("PrimeTable::mangoldt: n exceeds table limit");
        return mangoldt_[n];
    }

  private:
    std::size_t limit_;
    std::vector<double> mangoldt_;
};

struct ZetaEval {
    CertComplex value;
    CertComplex derivative;  // valid only when has_derivative
    bool has_derivative = false;
};

// Certified zeta(s) (and optionally zeta'(s)) for sigma >= -1, |t| <= 1000,
// s != 1, via Euler-Maclaurin with N = max(50, 2|t|) initial terms, B2..B8
// corrections and the classical remainder bound.
ZetaEval zeta_em(double sigma, double t, bool want_derivative = false);

// f(s) through the log-derivative identity
//   f(s) = 2 Re zeta'/zeta(s) + log(disc / pi^n) + Re(2/s + 2/(s-1))
//        + (r1 + r2) Re psi(s/2) + r2 Re psi((s+1)/2).
// Rational field only (the zeta oracle does not cover other fields);
// sigma in (0, 2], |t| <= 1000, s away from zeros and poles.
CertValue f_explicit(const FieldInvariants& field, double sigma, double t);

// f(s) as a sum over tabulated zeros within |gamma - t| <= cutoff_G (both
// conjugates of each listed zero), plus a certified tail radius built from
// unit-window count bounds.  Requires sigma > 1/2, table coverage of
// |t| + cutoff_G, and cutoff_G >= 2.
CertValue f_from_zeros(const ZeroTable& table, double sigma, double t, double cutoff_G);

struct Psi1Result {
    double value;      // sum_{n <= x} Lambda(n) (x - n)
    bool bound_holds;  // |value - x^2/2| <= 0.0462 x^{3/2} + 1.838 x
};
Psi1Result chebyshev_psi1(double x, const PrimeTable& table);

struct PrimeExpSum {
    CertValue lhs;  // sum Lambda(n) n^-sigma e^{-delta n}, certified
    double rhs;     // delta^{sigma-1}/(1-sigma) + 0.07/(2 sigma-1) + 4
    bool holds;
};
// Rational-field weighted prime power sum; the table must reach 50/delta.
PrimeExpSum prime_exp_sum(double sigma, double delta, const PrimeTable& table);

// Completed zeta xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s) for the
// functional-equation spot check.
CertComplex xi_completed(double sigma, double t);

}  // namespace zetabound
