#pragma once

#include <string>
#include <vector>

#include "crossdiff/config.hpp"

namespace crossdiff {

/// Named reproductions of the reference experiments. A preset may expand to
/// several runs (parameter sweeps, paired initial data).
struct Preset {
    std::string name;
    std::string description;
    std::vector<RunConfig> runs;
};

const std::vector<std::string>& preset_names();
bool is_preset_name(const std::string& name);
Preset make_preset(const std::string& name);

/// The single-run expansion used when a config file says `preset = NAME`
/// (first run of the preset).
RunConfig preset_base_config(const std::string& name);

}  // namespace crossdiff
