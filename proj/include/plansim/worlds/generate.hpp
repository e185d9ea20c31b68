#pragma once

#include <cstdint>
#include <utility>

#include "plansim/worlds/scenario.hpp"

namespace plansim::worlds {

struct GenerateOptions {
  Variant variant = Variant::Base;
  std::string theme = "theme-1";
  /// Resample until a plan exists (planning datasets). When false, unsolvable
  /// maps are kept and flagged — action simulation is well-defined on them.
  bool require_solvable = true;
  int max_attempts = 500;
};

/// Grid sizes supported per world; generate_map rejects sizes outside.
std::pair<int, int> size_range(World w);

/// Deterministic procedural map generation. `obstacle_prob` controls hole /
/// wall / counter / desk density (and package count). The scenario records
/// its seed and a solvability flag computed by a breadth-first search over
/// simulator states.
GridScenario generate_map(World w, int size, double obstacle_prob, std::uint64_t seed,
                          const GenerateOptions& options = {});

/// Ingredient object names for an Overcooked theme (the held-out theme swaps
/// the ingredient set).
std::pair<std::string, std::string> overcooked_ingredients(const std::string& theme);

}  // namespace plansim::worlds
