#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossdiff/model.hpp"
#include "crossdiff/projection.hpp"
#include "crossdiff/scheme.hpp"

namespace crossdiff {

/// Initial data for one run: per-species piecewise-constant segments, or a
/// named analytic profile with parameters (optionally shifted).
struct InitialSpec {
    std::vector<Segment> rho_segments;
    std::vector<Segment> eta_segments;
    std::string profile_family;  // empty when segments are used
    std::map<std::string, double> profile_params;
    double shift = 0.0;
};

struct OutputSpec {
    std::string directory = ".";
    bool csv = true;
    bool json_report = true;
};

struct RunConfig {
    std::string name = "run";
    double grid_L = 3.0;
    int grid_N = 800;
    ModelParams model = attractive_attractive_params(1.0);
    InitialSpec initial;
    StepControls controls;
    OutputSpec output;
};

/// All violations found while parsing, each tagged with its line number.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    std::vector<std::string> violations;
};

/// Parses the `section.key = value` format (UTF-8, '#' comments). Unknown
/// keys, type mismatches and precondition violations are all collected and
/// reported together. A `preset = NAME` line expands the preset first; other
/// lines override it.
RunConfig parse_config(const std::string& text);

/// Projects the configured initial data onto the grid.
SystemState build_initial_state(const RunConfig& config, const Grid& grid);

/// Warns (returns messages) when initial supports come closer than 10 cells
/// to the domain boundary.
std::vector<std::string> boundary_warnings(const RunConfig& config, const Grid& grid);

}  // namespace crossdiff
