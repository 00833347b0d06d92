#pragma once

#include <span>
#include <string_view>
#include <variant>

#include "football/branched.hpp"
#include "football/geometry.hpp"

namespace football {

// The six bundled parameter sets: five footballs covering cone angles
// pi, 2*pi and 4*pi, and one branched cover of angle 4*pi.
struct Preset {
  std::string_view id;
  std::variant<FootballParams, BranchParams> params;
};

std::span<const Preset> presets();

// nullptr when no preset has the given id.
const Preset* find_preset(std::string_view id);

}  // namespace football
