#pragma once

#include <string>
#include <vector>

#include "plansim/worlds/scenario.hpp"

namespace plansim::worlds {

/// A non-empty list of domain-legal action names.
struct ActionSeq {
  std::vector<std::string> actions;
};

struct StepOutcome {
  enum class Result { Successful, Unsuccessful, Invalid };

  Result result = Result::Successful;
  /// True when the action's transition happened (the agent moved, an object
  /// changed, ...). Border and wall bumps leave the world untouched and are
  /// not executed; falling into an ice hole is a transition that ends the
  /// game, so it counts as executed. This mirrors which ground actions are
  /// applicable in the matching PDDL encoding.
  bool executed = false;
  std::string reasoning;
  GridScenario next;
};

const char* result_name(StepOutcome::Result r);  // "Successful" | "Unsuccessful" | "Invalid"

/// Applies one action. The label must already be canonical for the world
/// (see normalize_label); anything else throws.
StepOutcome step(const GridScenario& sc, const std::string& label);

struct TraceStep {
  std::string action;
  std::string reasoning;
  StepOutcome::Result result = StepOutcome::Result::Successful;
  bool executed = false;

  bool operator==(const TraceStep&) const = default;
};

/// Full record of executing an action sequence: per-step reasoning and
/// result labels plus the final goal verdict.
struct ExecutionTrace {
  std::vector<TraceStep> steps;
  bool goal_reached = false;
  GridScenario final_state;
};

/// Folds step over the sequence. The goal verdict is Successful only when
/// the final state satisfies the world's goal and no terminal failure
/// happened along the way. Throws on an empty sequence.
ExecutionTrace run_sequence(const GridScenario& sc, const ActionSeq& seq);

bool goal_reached(const GridScenario& sc);

/// Labels whose step from `sc` would count as executed. This is the
/// branching set for exploration walks.
std::vector<std::string> executed_labels(const GridScenario& sc);

}  // namespace plansim::worlds
