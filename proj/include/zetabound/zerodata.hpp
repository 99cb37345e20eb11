// zerodata.hpp
//
// Ingestion of zero-ordinate tables, empirical window counts, and the
// bound-versus-empirical comparison report.
//
// Zero file format (bit-exact grammar):
//   - one decimal ordinate per line, strictly ascending, decimal point only
//   - '#' starts a comment
//   - optional directive line "height = <real>" certifying coverage
//   - LF or CRLF line endings; a UTF-8 BOM is rejected
// Without a height directive the coverage defaults to the last ordinate and
// the table is flagged as lacking certification.

#pragma once

#include "zetabound/core.hpp"

#include <string>
#include <vector>

namespace zetabound {

struct ZeroTable {
    std::vector<double> ordinates;  // ascending positive ordinates
    double height = 0.0;            // all zeros with 0 < gamma <= height are present
    FieldInvariants field;
    std::string source;
    bool height_defaulted = false;      // no height directive in the file
    bool plausibility_warning = false;  // height > last ordinate + 1
};

ZeroTable parse_zeros(const std::string& text, const FieldInvariants& field,
                      const std::string& source_name);
ZeroTable load_zeros(const std::string& path, const FieldInvariants& field);

// Number of ordinates in [T - a, T + a], inclusive at both ends.
// Requires T - a > 0 and T + a <= table.height.
int empirical_count(const ZeroTable& table, double T, double a);

// Largest number of table entries within tol of one another around height T
// (repeated ordinates model multiple zeros).
int cluster_multiplicity(const ZeroTable& table, double T, double tol = 1e-6);

struct ComparisonRow {
    double T = 0.0;
    double a = 0.0;
    int empirical = 0;
    bool grh_applicable = false;  // a in (0,2) and T >= 10 + a
    double grh_bound = 0.0;
    double uncond_bound = 0.0;
    double grh_slack = 0.0;
    double uncond_slack = 0.0;
};

// One row per (T, a); throws CoverageError if the grid leaves table coverage.
std::vector<ComparisonRow> comparison_table(const ZeroTable& table,
                                            const std::vector<double>& T_grid,
                                            const std::vector<double>& a_set);

}  // namespace zetabound
