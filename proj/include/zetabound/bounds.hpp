// bounds.hpp
//
// The explicit bound formulas:
//   - Trudgian's unconditional zero-counting bracket for N(T)
//   - unit-window and weighted zero-sum bounds derived from it
//   - the five contour-term bounds entering the critical-strip estimate
//   - the critical-strip bound for zeta'/zeta with conductor parameter Q
//   - the concave majorant f_tilde and the window / multiplicity bounds
//   - the two corollary forms (log L / log Q choice, and the ratio checks
//     for the 4 log T / log log T range)
//
// Everything here is plain binary64: these are upper bounds with >= 1%
// slack by construction, so certified rounding is not needed.

#pragma once

#include "zetabound/core.hpp"

namespace zetabound {

// Constants of Trudgian's explicit N(T) bound.
struct TrudgianConstants {
    static constexpr double d1 = 0.317;
    static constexpr double d2 = 6.9157;  // upper bound for 6.333 + 0.317 log(2 pi)
    static constexpr double d3 = 3.482;
};

struct CountBracket {
    double main;             // (T/pi)(n log(T/2 pi e) + log_disc)
    double remainder_bound;  // d1 W(T) + d2 n + d3
};

// N(T) in [main - remainder_bound, main + remainder_bound], T >= 1.
CountBracket trudgian_count(const FieldInvariants& field, double T);

// Upper bound for the number of zeros within distance 1 of height t.
double unit_window_count_bound(const FieldInvariants& field, double t);

// Upper bound for sum over |gamma - t| <= c of 1/|u + i(gamma - t)|,
// valid for c > 0, |t| > c + 1, u > 0.
double zero_sum_bound(const FieldInvariants& field, double c, double t, double u);

enum class ContourTerm { I, II, III, IVa, IV };

struct ContourParams {
    double sigma = 0.75;
    double t = 10.0;
    double delta = 1e-2;
};

// The displayed right-hand side of the corresponding contour-term bound.
double contour_term_bound(ContourTerm term, const FieldInvariants& field,
                          const ContourParams& p);

// Term III before the asinh(4/(2 sigma - 1)) <= log(1/(2 sigma - 1)) + asinh 4
// simplification; dominated by the displayed form whenever degree >= 1.
double contour_zero_sum_sharp(const FieldInvariants& field, const ContourParams& p);

// |zeta'/zeta(sigma + it)| bound, sigma in (1/2, 1), |t| >= 10; delta = Q^-2.
BoundBreakdown zeta_logderiv_bound(const FieldInvariants& field, double sigma, double t);

// The concave majorant
//   f~(sigma + iT) = Q + 2 (n/(1-sigma) + log(1/(2 sigma-1))/pi
//                         + 0.64/(2 sigma-1) + 1.37) Q^{2-2 sigma}
//                      + (0.14/(2 sigma-1) - 20) n.
BoundBreakdown f_tilde(const FieldInvariants& field, double sigma, double T);

// Window count bound (a/2) f~(1/2 + a/4 + iT), a in (0,2), T >= 10 + a.
BoundBreakdown bound_window(const FieldInvariants& field, double T, double a);

// Multiplicity bound 0.3 (2 sigma - 1) f~(sigma + iT), sigma in (1/2,1), T >= 10.
BoundBreakdown bound_multiplicity(const FieldInvariants& field, double T, double sigma);

// Multiplicity bound after the eps = log L / log Q substitution, L = log Q:
//   (0.3 log L + 0.4 + 0.2 log^2 L / L + (log L / L)(1.9 n + 0.9)) Q / log Q.
double corollary1_bound(const FieldInvariants& field, double T);

struct Corollary2Report {
    double bound_ratio;   // LHS / RHS of the 4 log T / log log T comparison
    bool subcheck1;       // 0.3 log L + 2.8 log L/L + 0.2 log^2 L/L + 0.4 <= 2
    bool subcheck2;       // Q / log Q <= 2 log T / log log T
    bool l_threshold_ok;  // ... <= 4 (1 - 1e-10)
};

// Rational-field instance with Q = log T + 31; requires log T >= 23.
Corollary2Report corollary2_margin(double logT);

// The L-only expression 0.3 log L + 2.8 log L / L + 0.2 log^2 L / L + 0.4
// and its two thresholds, exposed for bisection.
double cor2_l_expression(double L);
bool cor2_subcheck1(double L);       // expression <= 2
bool cor2_l_threshold_ok(double L);  // expression <= 4 (1 - 1e-10)

}  // namespace zetabound
