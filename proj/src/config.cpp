#include "crossdiff/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crossdiff/analytic_aa.hpp"
#include "crossdiff/analytic_ar.hpp"
#include "crossdiff/presets.hpp"
#include "crossdiff/profile_io.hpp"

namespace crossdiff {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::ostringstream out;
    out << "configuration invalid (" << violations.size() << " problem(s)):";
    for (const auto& v : violations) out << "\n  " << v;
    return out.str();
}

std::string trim(std::string s) {
    const auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

// "indicator(lo,hi,mass)" / "segment(lo,hi,height)" terms joined by '+'.
std::vector<Segment> parse_segments(const std::string& value) {
    std::vector<Segment> out;
    std::size_t pos = 0;
    while (pos < value.size()) {
        std::size_t plus = value.find('+', pos);
        std::string term = trim(value.substr(pos, plus == std::string::npos ? plus : plus - pos));
        pos = plus == std::string::npos ? value.size() : plus + 1;
        if (term.empty()) continue;
        const auto open = term.find('(');
        const auto close = term.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("expected name(a,b,c), got '" + term + "'");
        const std::string fn = trim(term.substr(0, open));
        std::vector<double> args;
        std::stringstream argstream(term.substr(open + 1, close - open - 1));
        std::string piece;
        while (std::getline(argstream, piece, ',')) args.push_back(std::stod(trim(piece)));
        if (args.size() != 3)
            throw std::invalid_argument("'" + fn + "' needs 3 arguments, got " +
                                        std::to_string(args.size()));
        if (fn == "indicator")
            out.push_back(indicator(args[0], args[1], args[2]));
        else if (fn == "segment")
            out.push_back(Segment{args[0], args[1], args[2]});
        else
            throw std::invalid_argument("unknown initial-data term '" + fn + "'");
    }
    return out;
}

// "family(key=value, key=value)"
void parse_profile_initial(const std::string& value, InitialSpec& initial) {
    const auto open = value.find('(');
    if (open == std::string::npos) {
        initial.profile_family = trim(value);
        return;
    }
    const auto close = value.rfind(')');
    if (close == std::string::npos || close < open)
        throw std::invalid_argument("unbalanced parentheses in '" + value + "'");
    initial.profile_family = trim(value.substr(0, open));
    std::stringstream argstream(value.substr(open + 1, close - open - 1));
    std::string piece;
    while (std::getline(argstream, piece, ',')) {
        piece = trim(piece);
        if (piece.empty()) continue;
        const auto eq = piece.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in profile spec, got '" + piece + "'");
        initial.profile_params[trim(piece.substr(0, eq))] = std::stod(trim(piece.substr(eq + 1)));
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> v)
    : std::runtime_error(join_violations(v)), violations(std::move(v)) {}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::vector<std::string> violations;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> entries;

    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    bool preset_seen = false;
    while (std::getline(stream, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            violations.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "preset") {
            if (!is_preset_name(value)) {
                violations.push_back("line " + std::to_string(lineno) + ": unknown preset '" +
                                     value + "'");
                continue;
            }
            config = preset_base_config(value);
            preset_seen = true;
            continue;
        }
        entries.push_back({lineno, {key, value}});
    }
    (void)preset_seen;

    for (const auto& [no, kv] : entries) {
        const auto& [key, value] = kv;
        auto fail = [&](const std::string& what) {
            violations.push_back("line " + std::to_string(no) + ": " + key + ": " + what);
        };
        try {
            if (key == "name") config.name = value;
            else if (key == "grid.L") config.grid_L = std::stod(value);
            else if (key == "grid.N") config.grid_N = std::stoi(value);
            else if (key == "model.epsilon") config.model.epsilon = std::stod(value);
            else if (key == "model.W11") config.model.w11 = parse_potential(value);
            else if (key == "model.W12") config.model.w12 = parse_potential(value);
            else if (key == "model.W21") config.model.w21 = parse_potential(value);
            else if (key == "model.W22") config.model.w22 = parse_potential(value);
            else if (key == "initial.rho") config.initial.rho_segments = parse_segments(value);
            else if (key == "initial.eta") config.initial.eta_segments = parse_segments(value);
            else if (key == "initial.profile") parse_profile_initial(value, config.initial);
            else if (key == "initial.shift") config.initial.shift = std::stod(value);
            else if (key == "controls.t_end") config.controls.t_end = std::stod(value);
            else if (key == "controls.steady_tol") config.controls.steady_tol = std::stod(value);
            else if (key == "controls.cfl_safety") config.controls.cfl_safety = std::stod(value);
            else if (key == "controls.dt_max") config.controls.dt_max = std::stod(value);
            else if (key == "controls.snapshot_stride")
                config.controls.snapshot_stride = std::stoi(value);
            else if (key == "output.dir") config.output.directory = value;
            else if (key == "output.formats") {
                config.output.csv = value.find("csv") != std::string::npos;
                config.output.json_report = value.find("json") != std::string::npos;
                if (!config.output.csv && !config.output.json_report)
                    fail("expected a list containing csv and/or json");
            } else fail("unknown key");
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    // Cross-field validation.
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) violations.push_back(what);
    };
    check(config.grid_L > 0.0, "grid.L: must be positive");
    check(config.grid_N >= 2, "grid.N: need at least 2 cells");
    check(config.model.epsilon > 0.0, "model.epsilon: must be positive");
    check(config.controls.cfl_safety > 0.0 && config.controls.cfl_safety <= 1.0,
          "controls.cfl_safety: must lie in (0, 1]");
    check(config.controls.dt_max > 0.0, "controls.dt_max: must be positive");
    check(config.controls.steady_tol > 0.0, "controls.steady_tol: must be positive");
    check(config.controls.t_end > 0.0, "controls.t_end: must be positive");
    const bool has_segments =
        !config.initial.rho_segments.empty() || !config.initial.eta_segments.empty();
    check(has_segments || !config.initial.profile_family.empty(),
          "initial: no initial data configured");
    if (!violations.empty()) throw ConfigError(std::move(violations));
    return config;
}

SystemState build_initial_state(const RunConfig& config, const Grid& grid) {
    SystemState state;
    state.time = 0.0;
    const InitialSpec& init = config.initial;
    if (init.profile_family.empty()) {
        state.rho = project_segments(init.rho_segments, grid);
        state.eta = project_segments(init.eta_segments, grid);
        return state;
    }
    auto param = [&](const std::string& key, std::optional<double> fallback = {}) {
        if (auto it = init.profile_params.find(key); it != init.profile_params.end())
            return it->second;
        if (fallback) return *fallback;
        throw std::invalid_argument("initial.profile: missing parameter '" + key + "'");
    };
    const double eps = param("epsilon", config.model.epsilon);
    ConstructedProfile profile = [&]() -> ConstructedProfile {
        const std::string& fam = init.profile_family;
        if (fam == "batman") {
            auto prof = solve_batman(param("m1"), param("m2"), eps);
            if (!prof) throw std::invalid_argument("initial.profile: batman root not found");
            return *prof;
        }
        if (fam == "second_kind") {
            auto prof = solve_second_kind(param("p"), param("m1"), param("m2"), eps);
            if (!prof) throw std::invalid_argument("initial.profile: second-kind root not found");
            return *prof;
        }
        if (fam == "segregated")
            return segregated_state(param("m1"), param("m2"), param("M2", 0.0), eps);
        if (fam == "two_pulse") return two_pulse(param("m"), eps, param("x0"));
        if (fam == "three_pulse")
            return three_pulse(param("m"), param("mL"), param("mR"), param("M2", 0.0), eps);
        throw std::invalid_argument("initial.profile: unknown family '" + fam + "'");
    }();
    AnalyticProfile ap = to_analytic(profile);
    const double shift = init.shift;
    auto shifted = [shift](std::function<double(double)> f) {
        return [f = std::move(f), shift](double x) { return f(x - shift); };
    };
    std::vector<double> breaks = ap.breakpoints;
    for (double& b : breaks) b += shift;
    state.rho = project_function(shifted(ap.rho), breaks, grid);
    state.eta = project_function(shifted(ap.eta), breaks, grid);
    return state;
}

std::vector<std::string> boundary_warnings(const RunConfig& config, const Grid& grid) {
    std::vector<std::string> warnings;
    const double margin = 10.0 * grid.dx;
    auto check_segments = [&](const std::vector<Segment>& segs, const char* which) {
        for (const Segment& s : segs) {
            if (s.height <= 0.0) continue;
            if (s.lo < -grid.half_width + margin || s.hi > grid.half_width - margin) {
                warnings.push_back(std::string("initial ") + which +
                                   " support within 10 cells of the domain boundary; "
                                   "enlarge grid.L");
                break;
            }
        }
    };
    check_segments(config.initial.rho_segments, "rho");
    check_segments(config.initial.eta_segments, "eta");
    return warnings;
}

}  // namespace crossdiff
