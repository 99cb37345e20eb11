// checks.hpp
//
// Named verification checks grouped into suites, shared by the CLI `verify`
// subcommand and the test binaries.  Every check states what it verified and
// whether it passed; suites never throw on a failed check, only on setup
// errors (missing tables and the like).

#pragma once

#include "zetabound/core.hpp"
#include "zetabound/riemann.hpp"
#include "zetabound/zerodata.hpp"

#include <string>
#include <vector>

namespace zetabound {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;  // not run for lack of inputs; never counts as failed
    std::string detail;
};

// Gamma-family: enclosure soundness, reflection/recurrence identities,
// envelope and boundary-grid properties, kernel monotonicity in t.
std::vector<CheckResult> run_suite_specfun();

// Displayed-inequality checks: digamma log bound grid, Gamma_K log-derivative
// difference, smoothed Chebyshev bound, weighted prime power sum grid,
// sharp-vs-displayed contour comparison.
std::vector<CheckResult> run_suite_lemmas();

// Covering-measure checks: five-atom optimum, three-atom identities,
// rescaling invariance.
std::vector<CheckResult> run_suite_measures();

// Zeta-oracle checks: special values, functional equation, dual f oracles
// and domination by the majorant (table-dependent checks run only when a
// zero table is supplied).
std::vector<CheckResult> run_suite_riemann(const ZeroTable* table);

}  // namespace zetabound
