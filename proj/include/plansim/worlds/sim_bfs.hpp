#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plansim/worlds/step.hpp"

namespace plansim::worlds {

struct SimBfsResult {
  /// Shortest action-label sequence reaching the goal, if one was found.
  std::optional<std::vector<std::string>> plan;
  bool capped = false;  // search hit the node cap before exhausting states
  std::uint64_t expanded = 0;
};

/// Breadth-first search over simulator states using the world's action
/// labels. Serves as the solvability check for map generation and as the
/// PDDL-independent shortest-plan oracle in tests.
SimBfsResult sim_shortest_plan(const GridScenario& sc, std::uint64_t node_cap = 2'000'000);

}  // namespace plansim::worlds
