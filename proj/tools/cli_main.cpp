// zetabound CLI
//
// Subcommands:
//   bound      --field F --T x --a y      window count bound with breakdown
//   mult       --field F --T x --sigma s  multiplicity bound
//   cor1       --field F --T x            log L / log Q multiplicity bound
//   cor2-check --logT x                   ratio and range subchecks
//   verify     [--suite ...] [--zeros f]  run the verification suites
//   measure    solve | check              five-atom solver / covering report
//   compare    --zeros f --field F --a l --T-range lo:hi:step   CSV report
//   table      --field F --T-range lo:hi:step [--a y | --sigma s]  bound grid
//
// Output floats use ten significant digits so identical invocations produce
// byte-identical output.  Exit codes: 0 success, 1 verification failure or
// runtime error, 2 usage error.

#include "zetabound/bounds.hpp"
#include "zetabound/checks.hpp"
#include "zetabound/core.hpp"
#include "zetabound/measures.hpp"
#include "zetabound/riemann.hpp"
#include "zetabound/zerodata.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace zetabound;
using nlohmann::json;

namespace {

std::string g10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

FieldInvariants resolve_field(const std::string& spec) {
    if (spec == "Q") return FieldInvariants::rationals();
    return load_field_file(spec);
}

// --zeros path resolution: literal path first, then ZETA_ZEROS_DIR.
std::string resolve_zeros_path(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    if (const char* dir = std::getenv("ZETA_ZEROS_DIR")) {
        const fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    throw Error("zero table not found: " + name +
                " (also searched ZETA_ZEROS_DIR)");
}

struct RangeSpec {
    double lo = 0.0, hi = 0.0, step = 1.0;
};

RangeSpec parse_range(const std::string& s) {
    RangeSpec r;
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--T-range", "expected lo:hi:step");
    try {
        r.lo = std::stod(s.substr(0, c1));
        r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stod(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--T-range", "expected lo:hi:step");
    }
    if (!(r.step > 0.0) || r.hi < r.lo)
        throw CLI::ValidationError("--T-range", "need step > 0 and hi >= lo");
    return r;
}

std::vector<double> expand(const RangeSpec& r) {
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = r.lo + r.step * i;
        if (x > r.hi + 1e-12) break;
        v.push_back(x);
    }
    return v;
}

void print_breakdown(const BoundBreakdown& b, bool as_json, const char* kind) {
    if (as_json) {
        json j{{"kind", kind},
               {"total", b.total},
               {"main_term", b.main_term},
               {"middle_term", b.middle_term},
               {"degree_term", b.degree_term},
               {"sigma", b.sigma},
               {"T", b.T},
               {"a", b.a},
               {"Q", b.Q}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << kind << " total " << g10(b.total) << "\n"
              << "  main_term   " << g10(b.main_term) << "\n"
              << "  middle_term " << g10(b.middle_term) << "\n"
              << "  degree_term " << g10(b.degree_term) << "\n"
              << "  params sigma=" << g10(b.sigma) << " T=" << g10(b.T) << " a=" << g10(b.a)
              << " Q=" << g10(b.Q) << "\n";
}

int run_verify(const std::string& suite, const std::string& zeros) {
    std::optional<ZeroTable> table;
    if (!zeros.empty())
        table = load_zeros(resolve_zeros_path(zeros), FieldInvariants::rationals());

    std::vector<CheckResult> results;
    auto append = [&results](std::vector<CheckResult> v) {
        results.insert(results.end(), v.begin(), v.end());
    };
    if (suite.empty() || suite == "specfun") append(run_suite_specfun());
    if (suite.empty() || suite == "lemmas") append(run_suite_lemmas());
    if (suite.empty() || suite == "measures") append(run_suite_measures());
    if (suite.empty() || suite == "riemann")
        append(run_suite_riemann(table ? &*table : nullptr));

    bool all = true;
    for (const auto& r : results) {
        const char* tag = r.skipped ? "SKIP " : (r.pass ? "PASS " : "FAIL ");
        std::cout << tag << r.name << ": " << r.detail << "\n";
        all = all && (r.pass || r.skipped);
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit zero-count bound toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text/CSV");

    std::string field_spec = "Q";
    double opt_T = 0.0, opt_a = 0.0, opt_sigma = 0.0, opt_logT = 0.0;
    std::string opt_zeros, opt_suite, opt_trange, opt_alist, opt_measure_action;

    auto* cmd_bound = app.add_subcommand("bound", "window count bound");
    cmd_bound->add_option("--field", field_spec, "field descriptor path or literal Q");
    cmd_bound->add_option("--T", opt_T, "window center")->required();
    cmd_bound->add_option("--a", opt_a, "window half-width")->required();

    auto* cmd_mult = app.add_subcommand("mult", "multiplicity bound");
    cmd_mult->add_option("--field", field_spec, "field descriptor path or literal Q");
    cmd_mult->add_option("--T", opt_T, "height")->required();
    cmd_mult->add_option("--sigma", opt_sigma, "evaluation abscissa in (1/2, 1)")->required();

    auto* cmd_cor1 = app.add_subcommand("cor1", "log L / log Q multiplicity bound");
    cmd_cor1->add_option("--field", field_spec, "field descriptor path or literal Q");
    cmd_cor1->add_option("--T", opt_T, "height")->required();

    auto* cmd_cor2 = app.add_subcommand("cor2-check", "ratio and range subchecks");
    cmd_cor2->add_option("--logT", opt_logT, "log of the height")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", opt_suite, "specfun|lemmas|measures|riemann")
        ->check(CLI::IsMember({"specfun", "lemmas", "measures", "riemann"}));
    cmd_verify->add_option("--zeros", opt_zeros, "zero table for the riemann suite");

    auto* cmd_measure = app.add_subcommand("measure", "covering measure tools");
    cmd_measure->add_option("action", opt_measure_action, "solve | check")
        ->required()
        ->check(CLI::IsMember({"solve", "check"}));

    auto* cmd_compare = app.add_subcommand("compare", "bound vs empirical CSV");
    cmd_compare->add_option("--zeros", opt_zeros, "zero table path")->required();
    cmd_compare->add_option("--field", field_spec, "field descriptor path or literal Q");
    cmd_compare->add_option("--a", opt_alist, "comma list of half-widths")->required();
    cmd_compare->add_option("--T-range", opt_trange, "lo:hi:step")->required();

    auto* cmd_table = app.add_subcommand("table", "bound grids for plotting");
    cmd_table->add_option("--field", field_spec, "field descriptor path or literal Q");
    cmd_table->add_option("--T-range", opt_trange, "lo:hi:step")->required();
    auto* table_a = cmd_table->add_option("--a", opt_a, "window half-width column");
    auto* table_sigma = cmd_table->add_option("--sigma", opt_sigma, "abscissa for the majorant");
    table_a->excludes(table_sigma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message
        return code == 0 ? 0 : 2;     // help exits 0, usage errors exit 2
    }

    try {
        if (cmd_bound->parsed()) {
            print_breakdown(bound_window(resolve_field(field_spec), opt_T, opt_a), as_json,
                            "window_bound");
            return 0;
        }
        if (cmd_mult->parsed()) {
            print_breakdown(bound_multiplicity(resolve_field(field_spec), opt_T, opt_sigma),
                            as_json, "multiplicity_bound");
            return 0;
        }
        if (cmd_cor1->parsed()) {
            const double v = corollary1_bound(resolve_field(field_spec), opt_T);
            if (as_json)
                std::cout << json{{"kind", "cor1"}, {"T", opt_T}, {"bound", v}}.dump() << "\n";
            else
                std::cout << "cor1 bound " << g10(v) << "\n";
            return 0;
        }
        if (cmd_cor2->parsed()) {
            const auto r = corollary2_margin(opt_logT);
            if (as_json) {
                std::cout << json{{"kind", "cor2"},
                                  {"logT", opt_logT},
                                  {"bound_ratio", r.bound_ratio},
                                  {"subcheck1", r.subcheck1},
                                  {"subcheck2", r.subcheck2},
                                  {"l_threshold_ok", r.l_threshold_ok}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "bound_ratio " << g10(r.bound_ratio) << "\n"
                          << "subcheck1 " << (r.subcheck1 ? "true" : "false") << "\n"
                          << "subcheck2 " << (r.subcheck2 ? "true" : "false") << "\n"
                          << "l_threshold_ok " << (r.l_threshold_ok ? "true" : "false") << "\n";
            }
            return (r.subcheck1 && r.subcheck2) ? 0 : 1;
        }
        if (cmd_verify->parsed()) return run_verify(opt_suite, opt_zeros);
        if (cmd_measure->parsed()) {
            const DeltaMeasure m = solve_five_delta();
            if (opt_measure_action == "solve") {
                if (as_json) {
                    json j{{"kind", "five_delta"},
                           {"alpha", m.alpha},
                           {"window_a", m.window_a},
                           {"centers", m.centers},
                           {"weights", m.weights},
                           {"cost", m.cost()}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "b1 " << g10(m.centers[1]) << "\nb2 " << g10(m.centers[2])
                              << "\n";
                    write_measure_csv(std::cout, m);
                    std::cout << "cost " << g10(m.cost()) << "\n";
                }
                return m.cost() <= 0.5 ? 0 : 1;
            }
            const CoveringReport rep = covering_slack(m);
            if (as_json) {
                json j{{"kind", "covering"},
                       {"holds", rep.holds},
                       {"min_slack", rep.min_slack},
                       {"poly_degree", rep.poly_degree},
                       {"roots_accounted", rep.roots_accounted},
                       {"certificate", rep.root_certificate}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "holds " << (rep.holds ? "true" : "false") << "\n"
                          << "min_slack " << g10(rep.min_slack) << "\n"
                          << "certificate " << rep.root_certificate << "\n";
            }
            return rep.holds ? 0 : 1;
        }
        if (cmd_compare->parsed()) {
            const auto field = resolve_field(field_spec);
            const auto table = load_zeros(resolve_zeros_path(opt_zeros), field);
            std::vector<double> a_set;
            std::string tok;
            for (char c : opt_alist + ",") {
                if (c == ',') {
                    if (!tok.empty()) a_set.push_back(std::stod(tok));
                    tok.clear();
                } else {
                    tok += c;
                }
            }
            const auto rows = comparison_table(table, expand(parse_range(opt_trange)), a_set);
            bool violation = false;
            if (as_json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    arr.push_back(json{{"T", r.T},
                                       {"a", r.a},
                                       {"empirical", r.empirical},
                                       {"grh_bound", r.grh_applicable ? json(r.grh_bound)
                                                                      : json(nullptr)},
                                       {"uncond_bound", r.uncond_bound},
                                       {"grh_slack", r.grh_applicable ? json(r.grh_slack)
                                                                      : json(nullptr)},
                                       {"uncond_slack", r.uncond_slack}});
                    violation = violation || r.uncond_slack < 0.0 ||
                                (r.grh_applicable && r.grh_slack < 0.0);
                }
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << "T,a,empirical,grh_bound,uncond_bound,grh_slack,uncond_slack\n";
                for (const auto& r : rows) {
                    std::cout << g10(r.T) << "," << g10(r.a) << "," << r.empirical << ",";
                    if (r.grh_applicable)
                        std::cout << g10(r.grh_bound);
                    else
                        std::cout << "N/A";
                    std::cout << "," << g10(r.uncond_bound) << ",";
                    if (r.grh_applicable)
                        std::cout << g10(r.grh_slack);
                    else
                        std::cout << "N/A";
                    std::cout << "," << g10(r.uncond_slack) << "\n";
                    violation = violation || r.uncond_slack < 0.0 ||
                                (r.grh_applicable && r.grh_slack < 0.0);
                }
            }
            return violation ? 1 : 0;
        }
        if (cmd_table->parsed()) {
            const auto field = resolve_field(field_spec);
            const auto Ts = expand(parse_range(opt_trange));
            const bool with_window = table_a->count() > 0;
            const double sigma = table_sigma->count() > 0 ? opt_sigma : 0.75;
            if (!as_json) {
                std::cout << (with_window
                                  ? "T,Q,total,main_term,middle_term,degree_term\n"
                                  : "T,Q,ftilde,main_term,middle_term,degree_term\n");
            }
            json arr = json::array();
            for (double T : Ts) {
                const BoundBreakdown b = with_window ? bound_window(field, T, opt_a)
                                                     : f_tilde(field, sigma, T);
                if (as_json) {
                    arr.push_back(json{{"T", T},
                                       {"Q", b.Q},
                                       {"total", b.total},
                                       {"main_term", b.main_term},
                                       {"middle_term", b.middle_term},
                                       {"degree_term", b.degree_term}});
                } else {
                    std::cout << g10(T) << "," << g10(b.Q) << "," << g10(b.total) << ","
                              << g10(b.main_term) << "," << g10(b.middle_term) << ","
                              << g10(b.degree_term) << "\n";
                }
            }
            if (as_json) std::cout << arr.dump() << "\n";
            return 0;
        }
    } catch (const SignatureMismatch& e) {
        std::cerr << "SignatureMismatch: " << e.what() << "\n";
        return 1;
    } catch (const NegativeDiscriminant& e) {
        std::cerr << "NegativeDiscriminant: " << e.what() << "\n";
        return 1;
    } catch (const PoleError& e) {
        std::cerr << "PoleError: " << e.what() << "\n";
        return 1;
    } catch (const RangeError& e) {
        std::cerr << "RangeError: " << e.what() << "\n";
        return 1;
    } catch (const CoverageError& e) {
        std::cerr << "CoverageError: " << e.what() << "\n";
        return 1;
    } catch (const InsufficientTable& e) {
        std::cerr << "InsufficientTable: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 1;
    } catch (const MetaError& e) {
        std::cerr << "MetaError: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "DomainError: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
