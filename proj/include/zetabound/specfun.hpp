// specfun.hpp
//
// Certified Gamma-family evaluation and the Gamma-kernel integrals used by
// the contour bounds:
//
//   eval_gamma       log Gamma, digamma, |Gamma| on the complex plane, via
//                    upward recurrence into the Stirling zone and the
//                    Euler-Maclaurin expansion with the explicit B4-level
//                    remainder integral
//   stirling_envelope  effective Stirling upper bound for |Gamma(u+iv)|
//   kernel_integral  the four vertical-line integrals of |Gamma| against
//                    1, log(1+|y|), 1/|1+4iy| and Lorentz weights
//   check_digamma_log_bound   Re psi(s) <= log|s - 1/2| margin
//   gammaK_logderiv_diff      the Gamma_K log-derivative difference bound
//
// Everything returns CertValue enclosures.

#pragma once

#include "zetabound/core.hpp"

namespace zetabound {

enum class GammaKind { LogGamma, Digamma, AbsGamma };

enum class KernelKind { AbsLine, LogWeight, QuarterPole, Lorentz };

// Principal-branch-compatible log Gamma on Re z > 0; for Re z <= 0 the real
// part (and hence |Gamma| = exp Re) is still valid as long as z is not within
// `rem_target` reach of a pole.  Imaginary part is only meaningful off the
// negative real axis.
CertComplex log_gamma_complex(double re, double im, double rem_target = 1e-12);

// psi = Gamma'/Gamma at a complex point, both parts certified.
CertComplex digamma_complex(double re, double im, double rem_target = 1e-12);

// Re log Gamma / Re psi / |Gamma| at s = sigma + i t.
CertValue eval_gamma(GammaKind kind, double sigma, double t);

// Certified upper bound for |Gamma(u + iv)|:
//   min( effective Stirling bound with its remainder inflation  [u<0, v>0],
//        5.3 exp(-pi |v| / 2)                                    [u in [-3/4,-1/4]] ).
CertValue stirling_envelope(double u, double v);

// Enclosure of the corresponding integral over y in R:
//   AbsLine:     |Gamma(u+iy)|                          (t ignored)
//   LogWeight:   |Gamma(u+i(t-y))| log(1+|y|)           (t >= 10)
//   QuarterPole: |Gamma(u+i(t-y))| / |1+4iy|            (t >= 10)
//   Lorentz:     |Gamma(u+i(t-y))| / (1+alpha y^2)      (t >= 10, alpha in {1,2})
// Requires u in [-3/4, -1/4].
CertValue kernel_integral(KernelKind kind, double u, double t, int lorentz_alpha = 1);

// The pure exponential-envelope integrals
//   QuarterPole: F(t)       = int exp(-pi|t-y|/2) / |1+4iy| dy
//   Lorentz:     F_alpha(t) = int exp(-pi|t-y|/2) / (1+alpha y^2) dy
// used to majorize the corresponding Gamma kernels by 5.3 F(t).
CertValue envelope_kernel_integral(KernelKind kind, double t, int lorentz_alpha = 1);

// Tail moments of |Gamma| along the vertical line Re = u:
//   order 0: int_v^inf |Gamma(u+iw)| dw
//   order 1: int_v^inf (w-v) |Gamma(u+iw)| dw
CertValue gamma_tail_moment(double u, double v, int order);

// The reweighting reduction for the LogWeight kernel: the kernel integral is
// <= 4.73 log(1+t) provided 2 (1+t)^2 M1(u,t) <= int_0^t M1(u,y) dy, where
// M1 is the order-1 tail moment.  Returns both sides certified.
struct LogWeightReduction {
    CertValue lhs;  // 2 (1+t)^2 M1(u, t)
    CertValue rhs;  // lower bound for int_0^t M1(u, y) dy
    bool holds;
};
LogWeightReduction log_weight_reduction(double u, double t);

struct DigammaLogBound {
    bool holds;
    CertValue margin;  // log|s - 1/2| - Re psi(s)
};
// Requires sigma >= 0 and |t| >= sigma + 2.
DigammaLogBound check_digamma_log_bound(double sigma, double t);

struct GammaKLogderivDiff {
    CertValue lhs;  // |Gamma_K'/Gamma_K(1/4+it) - Gamma_K'/Gamma_K(2+it)|
    double rhs;     // 10 n / |1+4it|
    bool holds;
};
GammaKLogderivDiff gammaK_logderiv_diff(const FieldInvariants& field, double t);

}  // namespace zetabound
