#pragma once

#include <string>
#include <vector>

#include "plansim/worlds/scenario.hpp"

namespace plansim::oracle {

/// One "- ..." bullet of a scenario description.
struct DescriptionLine {
  std::string text;

  bool operator==(const DescriptionLine&) const = default;
};

/// The natural-language scenario description n_p: an "Initially:" block and
/// the goal-configuration block, in the fixed transcript format.
struct ScenarioDescription {
  std::string text;  // full block, no trailing newline
  std::vector<DescriptionLine> initial_lines;
  std::vector<DescriptionLine> goal_lines;

  bool operator==(const ScenarioDescription&) const = default;
};

/// Symbolic (ground-truth) description of a scenario.
ScenarioDescription describe_scenario(const worlds::GridScenario& sc);

/// Re-assembles the text block from structured lines; used to check that a
/// parsed remote description is well-formed.
std::string description_text(const std::vector<DescriptionLine>& initial,
                             const std::vector<DescriptionLine>& goal);

/// Parses a description block back into lines. Throws on malformed input.
ScenarioDescription parse_description(const std::string& text);

/// The task description n_d for a world (with the coordinate-convention
/// sentence). Non-Base variants swap the ice-hole failure clause for the
/// variant's rule sentence.
std::string task_description(worlds::World w, worlds::Variant v = worlds::Variant::Base);

}  // namespace plansim::oracle
