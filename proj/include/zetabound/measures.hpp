// measures.hpp
//
// Symmetric atomic covering measures: finite sets of Dirac atoms whose
// Poisson-kernel sum dominates the window indicator,
//
//   chi_[-a,a](g) <= sum_j c_j / (alpha^2 + (g - b_j)^2)   for all real g.
//
// Provided here: the five-atom optimum (found by a grid scan plus Newton
// refinement of the two tangency conditions), the three-atom closed forms,
// a root-accounting covering certifier, and the exact rescaling law
// (alpha, b_j, c_j) -> (s alpha, s b_j, s^2 c_j) for window s*a.

#pragma once

#include "zetabound/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace zetabound {

struct DeltaMeasure {
    double alpha = 0.25;    // alpha = sigma - 1/2 of the intended evaluation line
    double window_a = 1.0;  // covering window half-width
    // Non-negative atom centers, ascending, centers[0] == 0 permitted.  An
    // atom at b > 0 stands for the symmetric pair at +/- b with the same
    // weight; the atom at 0 is counted once.
    std::vector<double> centers;
    std::vector<double> weights;
    // Abscissae (non-negative representatives) where the kernel sum was
    // pinned to equal 1 by construction; used as deflation seeds by the
    // covering certifier.
    std::vector<double> equality_nodes;

    double total_mass() const;                // c_0 + 2 sum_{b_j > 0} c_j
    double cost() const;                      // total_mass / (2 alpha)
    double kernel_sum(double gamma) const;    // sum_j c_j / (alpha^2 + (g - b_j)^2)
};

// The unique five-atom measure for window a = 1, alpha = 1/4 with equality at
// g in {0, 3/5, 1}, a double tangency at 3/5 and a fourth-order contact at 0.
DeltaMeasure solve_five_delta();

// Three-atom measure with atoms at 0, +/- b and equality at g in {0, a}:
//   c0 = (-alpha^6 + (3b^2 - 2a^2) alpha^4 + (3b^2 - a^2) a^2 alpha^2)
//        / (b^2 (5 alpha^2 + a^2 + b^2))
//   c1 = (alpha^6 + (2a^2 + 3b^2) alpha^4 + (a^4 + 3b^4) alpha^2 + (a^2-b^2)^2 b^2)
//        / (2 b^2 (5 alpha^2 + a^2 + b^2))
DeltaMeasure three_delta(double a, double alpha, double b);

struct CoveringReport {
    bool holds = false;
    double min_slack = 0.0;         // min over the window of kernel_sum - 1
    std::string root_certificate;   // human-readable root accounting
    int poly_degree = 0;            // degree of the difference polynomial
    int roots_accounted = 0;        // roots found with multiplicity (complex pairs included)
};

// Certifies the covering inequality on [-a, a] (and non-negativity of the
// kernel sum outside) by forming
//   D(g) = sum_j c_j prod_{k != j} (alpha^2 + (g-b_k)^2)
//        - prod_k (alpha^2 + (g-b_k)^2),
// deflating the construction roots, and checking the residual polynomial has
// no further real roots inside the window; a dense grid floor backs this up.
CoveringReport covering_slack(const DeltaMeasure& m);

struct RescaleResult {
    double cost;  // cost of the *input* measure
    DeltaMeasure rescaled;
};
RescaleResult cost_and_rescale(const DeltaMeasure& m, double new_a);

// CSV export: header rows for alpha and window, then center,weight lines.
void write_measure_csv(std::ostream& out, const DeltaMeasure& m);

}  // namespace zetabound
