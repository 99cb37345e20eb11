#include "zetabound/zerodata.hpp"

#include "zetabound/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zetabound {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_number_token(const std::string& s) {
    // decimal point only; no comma, no exotic separators
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-' ||
              c == 'e' || c == 'E'))
            return false;
    return !s.empty();
}

}  // namespace

ZeroTable parse_zeros(const std::string& text, const FieldInvariants& field,
                      const std::string& source_name) {
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
        static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF)
        throw ParseError("zero table: UTF-8 BOM rejected", 1);

    ZeroTable table;
    table.field = field;
    table.source = source_name;

    bool have_height = false;
    double height = 0.0;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq != std::string::npos) {
            const std::string key = strip(line.substr(0, eq));
            const std::string val = strip(line.substr(eq + 1));
            if (key != "height")
                throw ParseError("zero table: unknown directive '" + key + "'", line_no);
            if (have_height) throw ParseError("zero table: duplicate height directive", line_no);
            try {
                std::size_t used = 0;
                height = std::stod(val, &used);
                if (used != val.size() || !std::isfinite(height) || height <= 0.0)
                    throw std::invalid_argument("height");
            } catch (const std::exception&) {
                throw ParseError("zero table: malformed height value", line_no);
            }
            have_height = true;
            continue;
        }

        if (!valid_number_token(line))
            throw ParseError("zero table: malformed ordinate '" + line + "'", line_no);
        double g = 0.0;
        try {
            std::size_t used = 0;
            g = std::stod(line, &used);
            if (used != line.size()) throw std::invalid_argument("ordinate");
        } catch (const std::exception&) {
            throw ParseError("zero table: malformed ordinate '" + line + "'", line_no);
        }
        if (!(g > 0.0) || !std::isfinite(g))
            throw ParseError("zero table: ordinates must be positive and finite", line_no);
        if (!table.ordinates.empty() && g < table.ordinates.back())
            throw OrderError("zero table: non-ascending ordinate", line_no);
        table.ordinates.push_back(g);
    }

    if (!have_height) {
        if (table.ordinates.empty())
            throw MetaError("zero table: empty table without a height directive");
        table.height = table.ordinates.back();
        table.height_defaulted = true;
    } else {
        table.height = height;
    }
    if (!table.ordinates.empty() && table.height > table.ordinates.back() + 1.0)
        table.plausibility_warning = true;
    return table;
}

ZeroTable load_zeros(const std::string& path, const FieldInvariants& field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open zero table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zeros(buf.str(), field, path);
}

int empirical_count(const ZeroTable& table, double T, double a) {
    if (!(a >= 0.0)) throw DomainError("empirical_count: a >= 0 required");
    if (!(T - a > 0.0))
        throw DomainError("empirical_count: window touches the real axis (T - a <= 0)");
    if (T + a > table.height)
        throw CoverageError("empirical_count: window exceeds certified coverage");
    const auto lo = std::lower_bound(table.ordinates.begin(), table.ordinates.end(), T - a);
    const auto hi = std::upper_bound(table.ordinates.begin(), table.ordinates.end(), T + a);
    return static_cast<int>(hi - lo);
}

int cluster_multiplicity(const ZeroTable& table, double T, double tol) {
    const auto lo = std::lower_bound(table.ordinates.begin(), table.ordinates.end(), T - tol);
    const auto hi = std::upper_bound(table.ordinates.begin(), table.ordinates.end(), T + tol);
    int best = 0;
    for (auto it = lo; it != hi; ++it) {
        const auto end =
            std::upper_bound(it, table.ordinates.end(), *it + tol);
        best = std::max(best, static_cast<int>(end - it));
    }
    return best;
}

std::vector<ComparisonRow> comparison_table(const ZeroTable& table,
                                            const std::vector<double>& T_grid,
                                            const std::vector<double>& a_set) {
    std::vector<ComparisonRow> rows;
    rows.reserve(T_grid.size() * a_set.size());
    for (double T : T_grid) {
        for (double a : a_set) {
            ComparisonRow row;
            row.T = T;
            row.a = a;
            row.empirical = empirical_count(table, T, a);

            // Unconditional bracket-based bound:
            //   n(T; a) <= (main(T+a) + R(T+a) - main(T-a) + R(T-a)) / 2.
            const CountBracket up = trudgian_count(table.field, T + a);
            const CountBracket dn = trudgian_count(table.field, T - a);
            row.uncond_bound =
                0.5 * (up.main + up.remainder_bound - dn.main + dn.remainder_bound);
            row.uncond_slack = row.uncond_bound - row.empirical;

            row.grh_applicable = (a > 0.0 && a < 2.0 && T >= 10.0 + a);
            if (row.grh_applicable) {
                row.grh_bound = bound_window(table.field, T, a).total;
                row.grh_slack = row.grh_bound - row.empirical;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace zetabound
