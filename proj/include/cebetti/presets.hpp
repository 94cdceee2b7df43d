#pragma once

#include "cebetti/model.hpp"

namespace cebetti {

/// Catalogue entry for one shipped manifold family.
struct PresetInfo {
    std::string name;
    std::string params;       // e.g. "n>=2, m>=1", empty if none
    std::string description;  // what manifold the family models
};

/// The shipped catalogue, in listing order.
const std::vector<PresetInfo>& preset_catalogue();

/// Instantiates a preset; throws std::invalid_argument for an unknown name
/// or an invalid parameter. Every preset returns a model that passes
/// validate() with zero violations.
CohomologyModel preset(const std::string& name, const std::map<std::string, long>& params = {});

}  // namespace cebetti
