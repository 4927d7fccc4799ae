#include "crossdiff/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossdiff {

double total_mass(const CellField& field, const Grid& grid) {
    double sum = 0.0;
    for (double v : field) sum += v;
    return grid.dx * sum;
}

std::pair<double, double> moments(const CellField& field, const Grid& grid) {
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < grid.cell_count; ++i) {
        const double x = grid.centers[i];
        m1 += x * field[i];
        m2 += x * x * field[i];
    }
    return {grid.dx * m1, grid.dx * m2};
}

namespace {

double entropy_sum(const CellField& field) {
    double sum = 0.0;
    for (double v : field) {
        if (v < 0.0) throw std::invalid_argument("energy: negative cell value");
        if (v > 0.0) sum += v * std::log(v);
    }
    return sum;
}

}  // namespace

double energy(const SystemState& state, const Grid& grid) {
    return grid.dx * (entropy_sum(state.rho) + entropy_sum(state.eta));
}

double min_cell_value(const SystemState& state) {
    double m = 0.0;
    for (double v : state.rho) m = std::min(m, v);
    for (double v : state.eta) m = std::min(m, v);
    return m;
}

DiagnosticsReport basic_report(const SystemState& state, const Grid& grid) {
    DiagnosticsReport r;
    r.time = state.time;
    r.mass_rho = total_mass(state.rho, grid);
    r.mass_eta = total_mass(state.eta, grid);
    std::tie(r.moment1_rho, r.moment2_rho) = moments(state.rho, grid);
    std::tie(r.moment1_eta, r.moment2_eta) = moments(state.eta, grid);
    r.energy = energy(state, grid);
    r.min_cell = min_cell_value(state);
    return r;
}

namespace {

// Best integer shift of `ref` against `num` by cross-correlation; positive
// shift moves the reference to the right.
int best_shift(const CellField& num_rho, const CellField& num_eta, const CellField& ref_rho,
               const CellField& ref_eta, int max_shift) {
    const int n = static_cast<int>(num_rho.size());
    int best = 0;
    double best_score = -1.0;
    for (int s = -max_shift; s <= max_shift; ++s) {
        double score = 0.0;
        for (int i = 0; i < n; ++i) {
            const int j = i - s;
            if (j < 0 || j >= n) continue;
            score += num_rho[i] * ref_rho[j] + num_eta[i] * ref_eta[j];
        }
        if (score > best_score) {
            best_score = score;
            best = s;
        }
    }
    return best;
}

double shifted(const CellField& f, int i, int s) {
    const int j = i - s;
    if (j < 0 || j >= static_cast<int>(f.size())) return 0.0;
    return f[j];
}

}  // namespace

double profile_error(const SystemState& numeric, const CellField& ref_rho,
                     const CellField& ref_eta, const Grid& grid, ErrorNorm norm, bool align) {
    const int n = grid.cell_count;
    if (static_cast<int>(ref_rho.size()) != n || static_cast<int>(ref_eta.size()) != n)
        throw std::invalid_argument("profile_error: reference grid mismatch");
    int s = 0;
    if (align) s = best_shift(numeric.rho, numeric.eta, ref_rho, ref_eta, n / 2);
    double l1 = 0.0, linf = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dr = std::abs(numeric.rho[i] - shifted(ref_rho, i, s));
        const double de = std::abs(numeric.eta[i] - shifted(ref_eta, i, s));
        l1 += dr + de;
        linf = std::max({linf, dr, de});
    }
    return norm == ErrorNorm::l1 ? grid.dx * l1 : linf;
}

std::vector<SupportInterval> extract_support(const CellField& field, const Grid& grid,
                                             double threshold_fraction) {
    if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
        throw std::invalid_argument("extract_support: threshold fraction must be in (0,1)");
    const int n = grid.cell_count;
    const double peak = *std::max_element(field.begin(), field.end());
    std::vector<SupportInterval> out;
    if (peak <= 0.0) return out;
    const double thr = threshold_fraction * peak;
    std::vector<char> on(n);
    for (int i = 0; i < n; ++i) on[i] = field[i] > thr;
    // Single-cell holes are roundoff speckle at first-order interfaces.
    for (int i = 1; i + 1 < n; ++i)
        if (!on[i] && on[i - 1] && on[i + 1]) on[i] = 1;
    int i = 0;
    while (i < n) {
        if (!on[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && on[j + 1]) ++j;
        out.push_back(
            SupportInterval{grid.left_edge(i), grid.right_edge(j), i, j});
        i = j + 1;
    }
    return out;
}

double measure_speed(const Trajectory& traj, const Grid& grid) {
    const std::size_t total = traj.snapshots.size();
    const std::size_t start = total / 2;
    const std::size_t count = total - start;
    if (count < 10)
        throw std::invalid_argument("measure_speed: need at least 10 snapshots in the window");
    double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
    for (std::size_t k = start; k < total; ++k) {
        const SystemState& s = traj.snapshots[k];
        const double mass = total_mass(s.rho, grid);
        const double com = mass > 0.0 ? moments(s.rho, grid).first / mass : 0.0;
        st += s.time;
        sx += com;
        stt += s.time * s.time;
        stx += s.time * com;
    }
    const double nn = static_cast<double>(count);
    const double denom = nn * stt - st * st;
    if (denom == 0.0) throw std::invalid_argument("measure_speed: degenerate time window");
    return (nn * stx - st * sx) / denom;
}

}  // namespace crossdiff
