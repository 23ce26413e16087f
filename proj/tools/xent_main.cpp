// xent: entanglement analysis of two-qubit X-states.
//
// Subcommands
//   analyze   classify one state file under every criterion
//   scan      classify a family over a parameter grid, emit CSV
//   audit     seeded random-ensemble statistics across the criteria
//   diagnose  per-inequality status of the trace-norm derivation chain
//
// Exit codes: 0 success, 2 invalid state, 3 parse error, 4 grid too large,
// 5 unwritable output, 6 audit disagreements under --strict.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "xent/audit.hpp"
#include "xent/criteria.hpp"
#include "xent/io.hpp"
#include "xent/scanner.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_state = 2;
constexpr int exit_parse = 3;
constexpr int exit_grid = 4;
constexpr int exit_unwritable = 5;
constexpr int exit_strict_disagreement = 6;

struct CommonFlags {
    std::string format = "text";
    xent::Tolerance tol;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--eps-herm", flags.tol.eps_herm, "Hermiticity/trace tolerance")
        ->capture_default_str();
    cmd->add_option("--eps-psd", flags.tol.eps_psd, "Eigenvalue-sign tolerance")
        ->capture_default_str();
    cmd->add_option("--eps-eq", flags.tol.eps_eq, "Closed-form vs oracle tolerance")
        ->capture_default_str();
}

void print_reports_text(const std::vector<xent::CriterionReport>& reports, double conc) {
    std::printf("%-12s %-15s %14s %14s %14s  %s\n", "criterion", "verdict", "lhs", "rhs",
                "margin", "branch");
    for (const auto& rep : reports)
        std::printf("%-12s %-15s %14s %14s %14s  %s\n", xent::to_string(rep.criterion),
                    xent::to_string(rep.verdict), xent::format_double(rep.lhs).c_str(),
                    xent::format_double(rep.rhs).c_str(), xent::format_double(rep.margin).c_str(),
                    xent::to_string(rep.branch));
    std::printf("concurrence: %s\n", xent::format_double(conc).c_str());
}

int run_analyze(const std::string& input, const CommonFlags& flags) {
    const xent::XState s = xent::read_state_file(input, flags.tol);
    xent::validate(s, flags.tol);
    const auto reports = xent::all_criterion_reports(s, flags.tol);
    const double conc = xent::concurrence(s, flags.tol);

    if (flags.format == "json") {
        nlohmann::json out;
        out["state"] = xent::state_to_json(s);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(xent::report_to_json(rep));
        out["reports"] = arr;
        out["concurrence"] = conc;
        std::cout << out.dump(2) << "\n";
    } else {
        print_reports_text(reports, conc);
    }
    return exit_ok;
}

// Accepts "x=0.1" / "y=0.2"; pins that axis of the grid.
void apply_slice(const std::string& slice, xent::GridSpec& grid) {
    const auto eq = slice.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError("--slice", "expected x=<value> or y=<value>");
    const std::string axis = slice.substr(0, eq);
    const double value = std::stod(slice.substr(eq + 1));
    if (axis == "x")
        grid.x_min = grid.x_max = value;
    else if (axis == "y")
        grid.y_min = grid.y_max = value;
    else
        throw CLI::ValidationError("--slice", "axis must be x or y");
}

int run_scan(const std::string& family, const xent::GridSpec& grid, bool sliced,
             const std::string& out_path, bool refine, const CommonFlags& flags) {
    const auto records = xent::scan(family, grid, flags.tol);
    const std::string csv = xent::scan_to_csv(records);

    std::ostream* summary_stream = &std::cout;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write \"" << out_path << "\"\n";
            return exit_unwritable;
        }
        out << csv;
        if (!out.good()) {
            std::cerr << "error: short write to \"" << out_path << "\"\n";
            return exit_unwritable;
        }
    } else {
        std::cout << csv;
        summary_stream = &std::cerr;
    }

    const bool x_fixed = grid.x_min == grid.x_max;
    const xent::Axis moving = x_fixed ? xent::Axis::Y : xent::Axis::X;
    const double fixed_value = x_fixed ? grid.x_min : grid.y_min;

    nlohmann::json json_summaries = nlohmann::json::array();
    for (const auto criterion :
         {xent::Criterion::Ppt, xent::Criterion::Ccn, xent::Criterion::Theorem1}) {
        auto sum = xent::summarize(records, criterion);
        std::optional<xent::BoundaryEstimate> boundary;
        std::optional<double> refined;
        if (sliced) {
            try {
                boundary = xent::boundary_estimate(records, criterion, moving, fixed_value);
                sum.boundary_estimates.push_back(*boundary);
                if (refine) {
                    const double lo = boundary->value - 0.5 * boundary->bracket;
                    const double hi = boundary->value + 0.5 * boundary->bracket;
                    refined = xent::bisect_transition(
                        [&](double v) {
                            const xent::FamilyPoint p = x_fixed
                                                            ? xent::FamilyPoint{fixed_value, v}
                                                            : xent::FamilyPoint{v, fixed_value};
                            const xent::XState s = xent::family_state(family, p);
                            try {
                                xent::validate(s, flags.tol);
                            } catch (const xent::Error&) {
                                return false;
                            }
                            const auto reports = xent::all_criterion_reports(s, flags.tol);
                            const std::size_t idx = criterion == xent::Criterion::Ppt ? 0
                                                    : criterion == xent::Criterion::Ccn ? 1
                                                                                        : 2;
                            return reports[idx].verdict == xent::Verdict::Entangled;
                        },
                        lo, hi);
                }
            } catch (const xent::NoTransitionError&) {
                // constant verdict along the slice; nothing to report
            }
        }

        if (flags.format == "json") {
            nlohmann::json j{{"criterion", xent::to_string(criterion)},
                             {"entangled", sum.entangled},
                             {"separable", sum.separable},
                             {"invalid", sum.invalid},
                             {"not_applicable", sum.not_applicable}};
            if (boundary) {
                j["boundary"] = {{"axis", boundary->axis == xent::Axis::X ? "x" : "y"},
                                 {"value", boundary->value},
                                 {"bracket", boundary->bracket}};
                if (refined) j["boundary"]["refined"] = *refined;
            }
            json_summaries.push_back(j);
        } else {
            (*summary_stream) << xent::to_string(criterion) << ": entangled=" << sum.entangled
                              << " separable=" << sum.separable << " invalid=" << sum.invalid
                              << " not_applicable=" << sum.not_applicable;
            if (boundary) {
                (*summary_stream) << "  boundary " << (boundary->axis == xent::Axis::X ? "x" : "y")
                                  << " = " << xent::format_double(boundary->value) << " +- "
                                  << xent::format_double(boundary->bracket);
                if (refined) (*summary_stream) << " (refined " << xent::format_double(*refined)
                                               << ")";
            }
            (*summary_stream) << "\n";
        }
    }
    if (flags.format == "json") (*summary_stream) << json_summaries.dump(2) << "\n";
    return exit_ok;
}

int run_audit(std::uint64_t samples, std::uint64_t seed, bool strict, const std::string& out_path,
              const CommonFlags& flags) {
    const xent::AuditSummary sum = xent::run_audit(samples, seed, flags.tol);

    if (!sum.disagreements.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write \"" << out_path << "\"\n";
            return exit_unwritable;
        }
        out << xent::disagreements_to_json(sum.disagreements).dump(2) << "\n";
    }

    if (flags.format == "json") {
        nlohmann::json j = xent::audit_summary_to_json(sum);
        if (!sum.disagreements.empty()) j["disagreement_dump"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("samples:                     %llu\n",
                    static_cast<unsigned long long>(sum.samples));
        std::printf("ppt_entangled:               %llu\n",
                    static_cast<unsigned long long>(sum.ppt_entangled));
        std::printf("ccn_detected:                %llu\n",
                    static_cast<unsigned long long>(sum.ccn_detected));
        std::printf("thm1_detected:               %llu\n",
                    static_cast<unsigned long long>(sum.thm1_detected));
        std::printf("ccn_missed_but_thm1_caught:  %llu\n",
                    static_cast<unsigned long long>(sum.ccn_missed_but_thm1_caught));
        std::printf("disagreements:               %zu\n", sum.disagreements.size());
        if (!sum.disagreements.empty())
            std::printf("disagreement dump written to %s\n", out_path.c_str());
    }
    if (strict && !sum.disagreements.empty()) return exit_strict_disagreement;
    return exit_ok;
}

int run_diagnose(const std::string& input, const CommonFlags& flags) {
    const xent::XState s = xent::read_state_file(input, flags.tol);
    const xent::DerivationReport rep = xent::derivation_diagnostics(s, flags.tol);

    if (flags.format == "json") {
        std::cout << xent::derivation_report_to_json(rep).dump(2) << "\n";
        return exit_ok;
    }

    std::printf("P = %s, Q = %s, branch = %s\n", xent::format_double(rep.P).c_str(),
                xent::format_double(rep.Q).c_str(), xent::to_string(rep.branch));
    std::printf("%-5s %14s %14s  %s\n", "ineq", "lhs", "rhs", "status");
    // Equation-level tally: the two rows of inequality 22 count once.
    std::size_t eq_total = 0, eq_hold = 0;
    bool eq22_applicable = false, eq22_holds = true;
    for (const auto& c : rep.checks) {
        const char* status = !c.applicable ? (c.holds ? "recorded (holds)" : "recorded (fails)")
                             : c.holds     ? "holds"
                                           : "FAILS";
        std::printf("%-5s %14s %14s  %s\n", c.id.c_str(), xent::format_double(c.lhs).c_str(),
                    xent::format_double(c.rhs).c_str(), status);
        if (c.id == "22a" || c.id == "22b") {
            eq22_applicable = c.applicable;
            eq22_holds = eq22_holds && c.holds;
            if (c.id == "22b" && eq22_applicable) {
                ++eq_total;
                if (eq22_holds) ++eq_hold;
            }
            continue;
        }
        if (c.applicable) {
            ++eq_total;
            if (c.holds) ++eq_hold;
        }
    }
    std::printf("%zu/%zu applicable inequalities hold\n", eq_hold, eq_total);
    return exit_ok;
}

int classify_error(const xent::Error& e) {
    if (dynamic_cast<const xent::ParseError*>(&e)) return exit_parse;
    if (dynamic_cast<const xent::GridTooLargeError*>(&e)) return exit_grid;
    if (dynamic_cast<const xent::UnknownFamilyError*>(&e)) return exit_parse;
    return exit_invalid_state;  // trace / positivity / shape / hermiticity
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement analysis of two-qubit X-states"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* analyze = app.add_subcommand("analyze", "Classify one state file");
    std::string analyze_input;
    analyze->add_option("input", analyze_input, "JSON state file")->required();
    add_common(analyze, flags);

    auto* scan_cmd = app.add_subcommand("scan", "Classify a family over a parameter grid");
    std::string family = "rho1";
    xent::GridSpec grid{0.0, 0.25, 0.0, 0.25, 1e-3};
    std::string slice, scan_out;
    bool refine = false;
    scan_cmd->add_option("--family", family, "Registered family name")->capture_default_str();
    scan_cmd->add_option("--x-min", grid.x_min)->capture_default_str();
    scan_cmd->add_option("--x-max", grid.x_max)->capture_default_str();
    scan_cmd->add_option("--y-min", grid.y_min)->capture_default_str();
    scan_cmd->add_option("--y-max", grid.y_max)->capture_default_str();
    scan_cmd->add_option("--step", grid.step, "Grid spacing")->capture_default_str();
    scan_cmd->add_option("--slice", slice, "Pin one axis, e.g. x=0.1");
    scan_cmd->add_option("--out", scan_out, "CSV output path (default: stdout)");
    scan_cmd->add_flag("--refine", refine, "Bisect the boundary inside its grid bracket");
    add_common(scan_cmd, flags);

    auto* audit_cmd = app.add_subcommand("audit", "Random-ensemble criterion statistics");
    std::uint64_t samples = 100000, seed = 1;
    bool strict = false;
    std::string audit_out = "audit_disagreements.json";
    audit_cmd->add_option("--samples", samples, "Number of sampled states")
        ->capture_default_str();
    audit_cmd->add_option("--seed", seed, "Sampler seed")->capture_default_str();
    audit_cmd->add_flag("--strict", strict, "Exit 6 when disagreements occur");
    audit_cmd->add_option("--out", audit_out, "Disagreement dump path")->capture_default_str();
    add_common(audit_cmd, flags);

    auto* diagnose = app.add_subcommand("diagnose", "Derivation-chain inequality status");
    std::string diagnose_input;
    diagnose->add_option("input", diagnose_input, "JSON state file")->required();
    add_common(diagnose, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(analyze_input, flags);
        if (app.got_subcommand(scan_cmd)) {
            if (!slice.empty()) apply_slice(slice, grid);
            return run_scan(family, grid, !slice.empty(), scan_out, refine, flags);
        }
        if (app.got_subcommand(audit_cmd))
            return run_audit(samples, seed, strict, audit_out, flags);
        if (app.got_subcommand(diagnose)) return run_diagnose(diagnose_input, flags);
    } catch (const xent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
