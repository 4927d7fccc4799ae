// Simulation cross-checks of the analytic constructions. These run the
// finite-volume scheme for many steps and take minutes, not seconds.
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "crossdiff/analytic_aa.hpp"
#include "crossdiff/analytic_ar.hpp"
#include "crossdiff/config.hpp"
#include "crossdiff/diagnostics.hpp"
#include "crossdiff/steady_check.hpp"

using namespace crossdiff;

namespace {

Trajectory simulate(const RunConfig& config) {
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    const KernelSet kernels = build_kernel_set(config.model, grid);
    return run(build_initial_state(config, grid), kernels, config.model, grid, config.controls);
}

}  // namespace

TEST_CASE("projected Batman profile is a near-fixed-point of the scheme") {
    const auto prof = solve_batman(0.6, 0.1, 0.12);
    REQUIRE(prof.has_value());
    RunConfig config;
    config.grid_L = 3.0;
    config.grid_N = 800;
    config.model = attractive_attractive_params(0.12);
    config.initial.profile_family = "batman";
    config.initial.profile_params = {{"m1", 0.6}, {"m2", 0.1}};
    config.controls.t_end = 1.0;
    config.controls.steady_tol = 1e-9;
    config.controls.snapshot_stride = 0;
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    const SystemState initial = build_initial_state(config, grid);
    const Trajectory traj = simulate(config);
    double l1 = 0.0;
    for (int i = 0; i < grid.cell_count; ++i) {
        l1 += std::abs(traj.final_state().rho[i] - initial.rho[i]);
        l1 += std::abs(traj.final_state().eta[i] - initial.eta[i]);
    }
    l1 *= grid.dx;
    CHECK(l1 < 5.0 * grid.dx);
}

TEST_CASE("attractor is even-symmetric below the bifurcation (split-indicator data)") {
    RunConfig config;
    config.grid_L = 3.0;
    config.grid_N = 256;
    config.model = attractive_attractive_params(0.12);
    config.initial.rho_segments = {indicator(-0.5, 0.0, 0.6)};
    config.initial.eta_segments = {indicator(0.0, 0.5, 0.1)};
    config.controls.t_end = 400.0;
    config.controls.steady_tol = 1e-10;
    config.controls.snapshot_stride = 0;
    const Trajectory traj = simulate(config);
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    const SystemState& final_state = traj.final_state();

    // reflect about the best integer pivot (2*center in cell units) and
    // measure the L1 evenness defect
    auto evenness_defect = [&](const CellField& f) {
        const int n = grid.cell_count;
        double best = 1e300;
        for (int pivot = n / 2; pivot <= 3 * n / 2; ++pivot) {
            double defect = 0.0;
            for (int i = 0; i < n; ++i) {
                const int j = pivot - i;  // mirror index
                const double mirrored = (j >= 0 && j < n) ? f[j] : 0.0;
                defect += std::abs(f[i] - mirrored);
            }
            best = std::min(best, defect * grid.dx);
        }
        return best;
    };
    CHECK(evenness_defect(final_state.rho) < 1e-6);
    CHECK(evenness_defect(final_state.eta) < 1e-6);
}

TEST_CASE("second-kind steady state: simulation matches the constructed profile") {
    // eta-inside-rho initial data relaxes onto the lower-envelope member.
    RunConfig config;
    config.grid_L = 6.0;
    config.grid_N = 800;
    config.model = attractive_attractive_params(1.7);
    config.initial.rho_segments = {indicator(-1.5, 1.5, 0.1)};
    config.initial.eta_segments = {indicator(-0.5, 0.5, 0.6)};
    config.controls.t_end = 1200.0;
    config.controls.steady_tol = 5e-9;
    config.controls.snapshot_stride = 0;
    const Trajectory traj = simulate(config);
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    const SystemState& final_state = traj.final_state();

    // measure the corner mass fraction of the light species
    const auto rho_supp = extract_support(final_state.rho, grid);
    REQUIRE(rho_supp.size() == 3);
    double corner_mass = 0.0;
    for (int i = 0; i <= rho_supp[0].last_cell; ++i) corner_mass += final_state.rho[i];
    for (int i = rho_supp[2].first_cell; i < grid.cell_count; ++i)
        corner_mass += final_state.rho[i];
    corner_mass *= grid.dx;
    const double p_measured = corner_mass / total_mass(final_state.rho, grid);

    const auto env = envelope_range(0.1, 0.6, 1.7);
    REQUIRE(env.has_value());
    // dynamics from enclosed data picks the minimal corner fraction
    CHECK(p_measured == doctest::Approx(env->p_min).epsilon(0.08));

    const auto prof = solve_second_kind(p_measured, 0.1, 0.6, 1.7);
    REQUIRE(prof.has_value());
    // support endpoints within 5 dx
    const auto eta_supp = extract_support(final_state.eta, grid);
    REQUIRE(eta_supp.size() == 1);
    CHECK(std::abs(rho_supp[0].lo - (-prof->d)) <= 5.0 * grid.dx);
    CHECK(std::abs(rho_supp[0].hi - (-prof->c)) <= 5.0 * grid.dx);
    CHECK(std::abs(rho_supp[1].lo - (-prof->b)) <= 5.0 * grid.dx);
    CHECK(std::abs(rho_supp[1].hi - prof->b) <= 5.0 * grid.dx);
    CHECK(std::abs(eta_supp[0].lo - (-prof->c)) <= 5.0 * grid.dx);
    CHECK(std::abs(eta_supp[0].hi - prof->c) <= 5.0 * grid.dx);
}

TEST_CASE("travelling pulse keeps its analytic shape over a domain crossing") {
    RunConfig config;
    config.grid_L = 12.0;
    config.grid_N = 800;
    config.model = attractive_repulsive_params(2.0 / 3.0);
    config.initial.profile_family = "two_pulse";
    config.initial.profile_params = {{"m", 1.0}, {"x0", 3.0}};
    config.controls.t_end = 6.0;
    config.controls.steady_tol = 1e-12;
    config.controls.snapshot_stride = 0;
    const Grid grid = build_grid(config.grid_L, config.grid_N);
    const Trajectory traj = simulate(config);

    // exact translate of the analytic pulse at the final time
    const TwoPulseProfile pulse = two_pulse(1.0, 2.0 / 3.0, 3.0);
    const AnalyticProfile ap = pulse.profile();
    const double tf = traj.final_state().time;
    auto shifted = [&](const std::function<double(double)>& f) {
        return [&f, tf](double x) { return f(x - tf); };
    };
    std::vector<double> breaks = ap.breakpoints;
    for (double& b : breaks) b += tf;
    const CellField ref_rho = project_function(shifted(ap.rho), breaks, grid);
    const CellField ref_eta = project_function(shifted(ap.eta), breaks, grid);
    double l1 = 0.0;
    for (int i = 0; i < grid.cell_count; ++i) {
        l1 += std::abs(traj.final_state().rho[i] - ref_rho[i]);
        l1 += std::abs(traj.final_state().eta[i] - ref_eta[i]);
    }
    l1 *= grid.dx;
    CHECK(l1 < 10.0 * grid.dx);
}
