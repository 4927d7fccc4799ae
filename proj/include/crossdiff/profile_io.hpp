#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "crossdiff/analytic_aa.hpp"
#include "crossdiff/analytic_ar.hpp"

namespace crossdiff {

/// Any constructed closed-form profile, for serialization and the CLI.
using ConstructedProfile = std::variant<BatmanProfile, SecondKindProfile, SegregatedProfile,
                                        TwoPulseProfile, ThreePulseProfile>;

std::string profile_family_name(const ConstructedProfile& profile);
AnalyticProfile to_analytic(const ConstructedProfile& profile);

/// JSON document: family tag, input parameters, support endpoints, amplitudes,
/// residuals, speed.
std::string profile_to_json(const ConstructedProfile& profile);

/// Rebuilds the profile from its document (re-running the constructor the
/// parameters name). Throws std::runtime_error on malformed documents.
ConstructedProfile profile_from_json(const std::string& text);

/// x,rho,eta rows sampled by cell-average projection on the given grid.
void write_profile_csv(std::ostream& out, const ConstructedProfile& profile, const Grid& grid);

}  // namespace crossdiff
