#include "crossdiff/run_output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace crossdiff {

using nlohmann::json;

std::string snapshots_to_csv(const Trajectory& traj, const Grid& grid) {
    std::string out = "t,x,rho,eta\n";
    out.reserve(out.size() + traj.snapshots.size() * grid.cell_count * 48);
    char buf[128];
    for (const SystemState& s : traj.snapshots) {
        for (int i = 0; i < grid.cell_count; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.time, grid.centers[i],
                          s.rho[i], s.eta[i]);
            out += buf;
        }
    }
    return out;
}

std::string report_to_json(const Trajectory& traj, const Grid& grid, const std::string& name) {
    json doc;
    doc["name"] = name;
    doc["termination"] = termination_reason_name(traj.reason);
    doc["steps"] = traj.steps;
    doc["grid"] = {{"L", grid.half_width}, {"N", grid.cell_count}, {"dx", grid.dx}};
    json series = json::array();
    for (const SystemState& s : traj.snapshots) {
        const DiagnosticsReport r = basic_report(s, grid);
        series.push_back({{"time", r.time},
                          {"mass_rho", r.mass_rho},
                          {"mass_eta", r.mass_eta},
                          {"M1", r.moment1_rho},
                          {"M2", r.moment1_eta},
                          {"Mbar1", r.moment2_rho},
                          {"Mbar2", r.moment2_eta},
                          {"energy", r.energy},
                          {"min_cell", r.min_cell}});
    }
    doc["snapshots"] = std::move(series);
    if (traj.snapshots.size() >= 20) {
        try {
            doc["measured_speed"] = measure_speed(traj, grid);
        } catch (const std::exception&) {
        }
    }
    return doc.dump(2);
}

LoadedRun load_snapshots_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("t,x,rho,eta", 0) != 0)
        throw std::runtime_error("snapshots CSV: missing t,x,rho,eta header");
    LoadedRun run;
    std::vector<double> xs;
    SystemState current;
    double current_t = 0.0;
    bool any = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t, x, r, e;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &t, &x, &r, &e) != 4)
            throw std::runtime_error("snapshots CSV: malformed row '" + line + "'");
        if (!any || t != current_t) {
            if (any) run.traj.snapshots.push_back(current);
            current = SystemState{};
            current.time = t;
            current_t = t;
            any = true;
        }
        if (run.traj.snapshots.empty()) xs.push_back(x);
        current.rho.push_back(r);
        current.eta.push_back(e);
    }
    if (any) run.traj.snapshots.push_back(current);
    if (run.traj.snapshots.empty()) throw std::runtime_error("snapshots CSV: no rows");
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw std::runtime_error("snapshots CSV: need at least 2 cells");
    const double dx = xs[1] - xs[0];
    run.grid = build_grid(xs[n - 1] + 0.5 * dx, n);
    for (const SystemState& s : run.traj.snapshots)
        if (static_cast<int>(s.rho.size()) != n)
            throw std::runtime_error("snapshots CSV: ragged snapshot blocks");
    return run;
}

std::string compare_to_json(const LoadedRun& run, const ConstructedProfile& profile) {
    const Grid& grid = run.grid;
    const AnalyticProfile ap = to_analytic(profile);
    for (const auto& [lo, hi] : ap.rho_support)
        if (lo < -grid.half_width || hi > grid.half_width)
            throw std::runtime_error("compare: profile support does not fit the run grid");
    const CellField ref_rho = ap.project_rho(grid);
    const CellField ref_eta = ap.project_eta(grid);
    const SystemState& final_state = run.traj.final_state();

    json doc;
    doc["l1_error"] = profile_error(final_state, ref_rho, ref_eta, grid, ErrorNorm::l1);
    doc["linf_error"] = profile_error(final_state, ref_rho, ref_eta, grid, ErrorNorm::linf);
    doc["dx"] = grid.dx;

    // Support mismatch after aligning by center-of-mass offset.
    const double mass_r = total_mass(final_state.rho, grid);
    double com_offset = 0.0;
    if (mass_r > 0.0) {
        double ref_com_num = 0.0, ref_mass = 0.0;
        for (int i = 0; i < grid.cell_count; ++i) {
            ref_com_num += grid.centers[i] * ref_rho[i];
            ref_mass += ref_rho[i];
        }
        const double ref_com = ref_mass > 0.0 ? ref_com_num / ref_mass : 0.0;
        com_offset = moments(final_state.rho, grid).first / mass_r - ref_com;
    }
    doc["alignment_offset"] = com_offset;

    auto support_mismatch = [&](const CellField& field,
                                const std::vector<std::pair<double, double>>& ref) {
        const auto intervals = extract_support(field, grid);
        if (intervals.size() != ref.size()) return json{{"component_count_mismatch", true}};
        double worst = 0.0;
        for (std::size_t k = 0; k < ref.size(); ++k) {
            worst = std::max(worst,
                             std::abs(intervals[k].lo - (ref[k].first + com_offset)));
            worst = std::max(worst,
                             std::abs(intervals[k].hi - (ref[k].second + com_offset)));
        }
        return json{{"max_endpoint_mismatch", worst}};
    };
    doc["support_rho"] = support_mismatch(final_state.rho, ap.rho_support);
    doc["support_eta"] = support_mismatch(final_state.eta, ap.eta_support);

    if (ap.speed != 0.0 && run.traj.snapshots.size() >= 20) {
        const double measured = measure_speed(run.traj, grid);
        doc["measured_speed"] = measured;
        doc["analytic_speed"] = ap.speed;
        doc["speed_mismatch"] = std::abs(measured - ap.speed) / std::abs(ap.speed);
    }
    return doc.dump(2);
}

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << contents;
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        return false;
    }
    return true;
}

}  // namespace crossdiff
