#include "football/presets.hpp"

#include <array>

namespace football {

std::span<const Preset> presets() {
  static const std::array<Preset, 6> table = {{
      {"ex5_1", FootballParams(0.5, 1)},    // alpha = 1/2, angles pi and pi
      {"ex5_2", FootballParams(0.5, 2)},    // alpha = 1, smooth poles
      {"ex5_3", FootballParams(0.5, 4)},    // alpha = 2, angles 4*pi
      {"ex5_4", FootballParams(0.25, 8)},   // alpha = 2, slimmer profile
      {"ex5_5", FootballParams(0.125, 16)},  // alpha = 2, slimmest profile
      {"ex5_6", BranchParams(2, 1.0)},      // branched, angles 4*pi
  }};
  return {table.data(), table.size()};
}

const Preset* find_preset(std::string_view id) {
  for (const Preset& p : presets())
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace football
