// Command-line front end: simulate | construct | compare | scan | preset list.
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crossdiff/analytic_aa.hpp"
#include "crossdiff/analytic_ar.hpp"
#include "crossdiff/config.hpp"
#include "crossdiff/diagnostics.hpp"
#include "crossdiff/presets.hpp"
#include "crossdiff/profile_io.hpp"
#include "crossdiff/run_output.hpp"
#include "crossdiff/simd_kernels.hpp"

namespace fs = std::filesystem;
using namespace crossdiff;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw DomainError("cannot create output directory '" + dir + "': " + ec.message());
}

void write_or_throw(const std::string& path, const std::string& contents) {
    if (!write_file(path, contents)) throw DomainError("cannot write '" + path + "'");
}

std::string gnuplot_script(const RunConfig& config, const std::string& csv_name) {
    std::ostringstream gp;
    gp << "# gnuplot script: final profiles of " << config.name << "\n"
       << "set datafile separator ','\n"
       << "stats '" << csv_name << "' using 1 nooutput\n"
       << "tfinal = STATS_max\n"
       << "set xlabel 'x'\n set ylabel 'density'\n"
       << "plot '" << csv_name << "' using ($1==tfinal ? $2 : 1/0):3 w l title 'rho', \\\n"
       << "     '" << csv_name << "' using ($1==tfinal ? $2 : 1/0):4 w l title 'eta'\n";
    return gp.str();
}

int run_simulation_config(const RunConfig& config, const std::string& outdir, bool emit_gnuplot) {
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    for (const std::string& w : boundary_warnings(config, grid))
        std::cerr << "warning: " << w << "\n";
    const SystemState initial = build_initial_state(config, grid);
    const KernelSet kernels = build_kernel_set(config.model, grid);
    const Trajectory traj = run(initial, kernels, config.model, grid, config.controls);

    ensure_dir(outdir);
    const std::string base = outdir + "/" + config.name;
    if (config.output.csv) write_or_throw(base + "_snapshots.csv", snapshots_to_csv(traj, grid));
    if (config.output.json_report)
        write_or_throw(base + "_report.json", report_to_json(traj, grid, config.name));
    if (emit_gnuplot)
        write_or_throw(base + ".gp", gnuplot_script(config, config.name + "_snapshots.csv"));

    const DiagnosticsReport rep = basic_report(traj.final_state(), grid);
    std::printf("%s: %s after %ld steps, t=%.6g, masses (%.12g, %.12g), min cell %.3g\n",
                config.name.c_str(), termination_reason_name(traj.reason), traj.steps,
                traj.final_state().time, rep.mass_rho, rep.mass_eta, rep.min_cell);
    return traj.reason == TerminationReason::step_rejected ? 1 : 0;
}

std::string bifurcation_csv(const BifurcationScan& scan, double m1, double m2) {
    std::string csv = "eps,batman_exists,second_kind_exists,p_min,p_max\n";
    char buf[160];
    for (std::size_t k = 0; k < scan.eps_grid.size(); ++k) {
        std::string pmin = "", pmax = "";
        if (scan.second_kind_exists[k]) {
            if (auto env = envelope_range(m1, m2, scan.eps_grid[k])) {
                pmin = std::to_string(env->p_min);
                pmax = std::to_string(env->p_max);
            }
        }
        std::snprintf(buf, sizeof buf, "%.17g,%d,%d,%s,%s\n", scan.eps_grid[k],
                      scan.batman_exists[k] ? 1 : 0, scan.second_kind_exists[k] ? 1 : 0,
                      pmin.c_str(), pmax.c_str());
        csv += buf;
    }
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-volume simulator and analytic steady states for the two-species "
                 "non-local cross-diffusion system"};
    app.require_subcommand(1);

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "run the finite-volume scheme");
    std::string sim_config, sim_preset, sim_out = "out", sim_format = "csv,json";
    bool sim_gnuplot = false;
    sim->add_option("--config", sim_config, "config file (section.key = value lines)");
    sim->add_option("--preset", sim_preset, "named preset");
    sim->add_option("--out", sim_out, "output directory");
    sim->add_option("--format", sim_format, "csv|json|csv,json");
    sim->add_flag("--gnuplot", sim_gnuplot, "also emit a gnuplot script per run");

    // --- construct ---
    auto* con = app.add_subcommand("construct", "build an analytic steady state / pulse");
    std::string con_family, con_out = "out";
    double con_eps = 1.0, con_m1 = 1.0, con_m2 = 1.0, con_p = 0.5, con_M2 = 0.0;
    double con_m = 1.0, con_mL = 0.5, con_mR = 0.5, con_x0 = 0.0;
    double con_L = 0.0;
    int con_N = 800;
    con->add_option("family", con_family, "batman|second_kind|segregated|two_pulse|three_pulse")
        ->required();
    con->add_option("--eps", con_eps, "cross-diffusivity");
    con->add_option("--m1", con_m1);
    con->add_option("--m2", con_m2);
    con->add_option("--p", con_p, "corner mass fraction (second_kind)");
    con->add_option("--M2", con_M2, "first moment of the split species");
    con->add_option("--m", con_m, "pulse mass");
    con->add_option("--mL", con_mL);
    con->add_option("--mR", con_mR);
    con->add_option("--x0", con_x0, "two-pulse separation");
    con->add_option("--grid-N", con_N, "cells for the sampled CSV");
    con->add_option("--grid-L", con_L, "half-width for the sampled CSV (0 = auto)");
    con->add_option("--out", con_out, "output directory");

    // --- compare ---
    auto* cmp = app.add_subcommand("compare", "compare a run against a constructed profile");
    std::string cmp_run, cmp_profile, cmp_out;
    cmp->add_option("--run", cmp_run, "snapshots CSV from simulate")->required();
    cmp->add_option("--profile", cmp_profile, "profile JSON from construct")->required();
    cmp->add_option("--out", cmp_out, "write comparison JSON here (default: stdout)");

    // --- scan ---
    auto* scan = app.add_subcommand("scan", "parameter sweeps (bifurcation, eps-c, envelope)");
    std::string scan_kind, scan_out = "out";
    double scan_m1 = 0.1, scan_m2 = 0.6, scan_lo = 0.5, scan_hi = 3.0;
    double scan_m1_lo = 0.5, scan_m1_hi = 2.0;
    int scan_steps = 26;
    scan->add_option("kind", scan_kind, "bifurcation|eps-c|envelope")->required();
    scan->add_option("--m1", scan_m1);
    scan->add_option("--m2", scan_m2);
    scan->add_option("--eps-min", scan_lo);
    scan->add_option("--eps-max", scan_hi);
    scan->add_option("--m1-min", scan_m1_lo, "eps-c table: first-species mass grid start");
    scan->add_option("--m1-max", scan_m1_hi, "eps-c table: first-species mass grid end");
    scan->add_option("--steps", scan_steps);
    scan->add_option("--out", scan_out, "output directory");

    // --- preset ---
    auto* preset_cmd = app.add_subcommand("preset", "preset utilities");
    auto* preset_list = preset_cmd->add_subcommand("list", "list presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help -> 0, anything else is a usage error
    }

    try {
        if (*preset_list) {
            for (const auto& name : preset_names()) {
                const Preset p = make_preset(name);
                std::printf("%-22s %s\n", p.name.c_str(), p.description.c_str());
            }
            return 0;
        }

        if (*sim) {
            if (sim_config.empty() == sim_preset.empty()) {
                std::cerr << "simulate: give exactly one of --config or --preset\n";
                return 2;
            }
            std::vector<RunConfig> runs;
            if (!sim_config.empty()) {
                std::ifstream in(sim_config);
                if (!in) throw DomainError("cannot open config '" + sim_config + "'");
                std::stringstream buffer;
                buffer << in.rdbuf();
                runs.push_back(parse_config(buffer.str()));
            } else {
                if (!is_preset_name(sim_preset)) {
                    std::cerr << "simulate: unknown preset '" << sim_preset << "'\n";
                    return 2;
                }
                if (sim_preset == "bifurcation_fig4_4") {
                    const BifurcationScan sc = bifurcation_scan(0.1, 0.6, 0.5, 3.0, 26);
                    ensure_dir(sim_out);
                    write_or_throw(sim_out + "/bifurcation_fig4_4.csv",
                                   bifurcation_csv(sc, 0.1, 0.6));
                    std::printf("bifurcation_fig4_4: eps1=%s eps2=%s\n",
                                sc.eps1 ? std::to_string(*sc.eps1).c_str() : "none",
                                sc.eps2 ? std::to_string(*sc.eps2).c_str() : "none");
                    return 0;
                }
                runs = make_preset(sim_preset).runs;
            }
            for (RunConfig& config : runs) {
                config.output.csv = sim_format.find("csv") != std::string::npos;
                config.output.json_report = sim_format.find("json") != std::string::npos;
                const int rc = run_simulation_config(config, sim_out, sim_gnuplot);
                if (rc != 0) return rc;
            }
            return 0;
        }

        if (*con) {
            ConstructedProfile profile = [&]() -> ConstructedProfile {
                if (con_family == "batman") {
                    auto prof = solve_batman(con_m1, con_m2, con_eps);
                    if (!prof) throw DomainError("batman: no admissible root in the scan region");
                    return *prof;
                }
                if (con_family == "second_kind") {
                    auto prof = solve_second_kind(con_p, con_m1, con_m2, con_eps);
                    if (!prof)
                        throw DomainError("second_kind: no stable root (p outside envelopes?)");
                    return *prof;
                }
                if (con_family == "segregated")
                    return segregated_state(con_m1, con_m2, con_M2, con_eps);
                if (con_family == "two_pulse") return two_pulse(con_m, con_eps, con_x0);
                if (con_family == "three_pulse")
                    return three_pulse(con_m, con_mL, con_mR, con_M2, con_eps);
                throw DomainError("unknown family '" + con_family + "'");
            }();
            ensure_dir(con_out);
            const std::string base = con_out + "/" + con_family;
            write_or_throw(base + ".json", profile_to_json(profile));
            double L = con_L;
            if (L <= 0.0) {
                const AnalyticProfile ap = to_analytic(profile);
                for (const auto& [lo, hi] : ap.rho_support) L = std::max({L, -lo, hi});
                for (const auto& [lo, hi] : ap.eta_support) L = std::max({L, -lo, hi});
                L = 1.25 * L + 0.5;
            }
            const Grid grid = build_grid(L, con_N);
            std::ostringstream csv;
            write_profile_csv(csv, profile, grid);
            write_or_throw(base + ".csv", csv.str());
            std::printf("%s written to %s.{json,csv}\n", con_family.c_str(), base.c_str());
            return 0;
        }

        if (*cmp) {
            std::ifstream run_in(cmp_run);
            if (!run_in) throw DomainError("cannot open run CSV '" + cmp_run + "'");
            const LoadedRun loaded = load_snapshots_csv(run_in);
            std::ifstream prof_in(cmp_profile);
            if (!prof_in) throw DomainError("cannot open profile JSON '" + cmp_profile + "'");
            std::stringstream buffer;
            buffer << prof_in.rdbuf();
            const ConstructedProfile profile = profile_from_json(buffer.str());
            const std::string doc = compare_to_json(loaded, profile);
            if (cmp_out.empty())
                std::cout << doc << "\n";
            else
                write_or_throw(cmp_out, doc);
            return 0;
        }

        if (*scan) {
            ensure_dir(scan_out);
            char buf[160];
            if (scan_kind == "bifurcation") {
                const BifurcationScan sc =
                    bifurcation_scan(scan_m1, scan_m2, scan_lo, scan_hi, scan_steps);
                write_or_throw(scan_out + "/bifurcation.csv", bifurcation_csv(sc, scan_m1, scan_m2));
                std::printf("bifurcation: eps1=%s eps2=%s\n",
                            sc.eps1 ? std::to_string(*sc.eps1).c_str() : "none",
                            sc.eps2 ? std::to_string(*sc.eps2).c_str() : "none");
                return 0;
            }
            if (scan_kind == "eps-c") {
                std::string csv = "m1,m2,eps_c\n";
                for (int k = 0; k < scan_steps; ++k) {
                    const double m1 =
                        scan_m1_lo + (scan_m1_hi - scan_m1_lo) * k / std::max(1, scan_steps - 1);
                    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", m1, scan_m2,
                                  critical_epsilon(m1, scan_m2));
                    csv += buf;
                }
                write_or_throw(scan_out + "/eps_c.csv", csv);
                std::printf("eps-c table written (%d rows)\n", scan_steps);
                return 0;
            }
            if (scan_kind == "envelope") {
                std::string csv = "eps,p_min,p_max\n";
                for (int k = 0; k < scan_steps; ++k) {
                    const double eps =
                        scan_lo + (scan_hi - scan_lo) * k / std::max(1, scan_steps - 1);
                    if (auto env = envelope_range(scan_m1, scan_m2, eps)) {
                        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", eps, env->p_min,
                                      env->p_max);
                        csv += buf;
                    }
                }
                write_or_throw(scan_out + "/envelope.csv", csv);
                std::printf("envelope table written\n");
                return 0;
            }
            std::cerr << "scan: unknown kind '" << scan_kind << "'\n";
            return 2;
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
