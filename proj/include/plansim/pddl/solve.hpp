#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plansim/pddl/ast.hpp"
#include "plansim/pddl/ground.hpp"

namespace plansim::pddl {

struct SolveResult {
  enum class Status { Solved, Unsolvable, BudgetExhausted };

  Status status = Status::Unsolvable;
  Plan plan;                   // shortest, only meaningful when Solved
  std::uint64_t expanded = 0;  // states popped from the frontier

  bool solved() const { return status == Status::Solved; }
};

/// Breadth-first forward search over ground states. Ground actions expand in
/// lexicographic (name, args) order, so results are reproducible. `budget`
/// caps the number of expanded states.
SolveResult solve(const Domain& domain, const Problem& problem,
                  std::uint64_t budget = 2'000'000);
SolveResult solve(const CompiledTask& task, std::uint64_t budget = 2'000'000);

struct PlanVerdict {
  bool valid = false;
  int failed_step = -1;  // 0-based index of the first failing step
  std::string reason;    // empty when valid
};

/// Replays the plan with the public apply semantics and checks the goal in
/// the final state. Deliberately independent of the compiled fast path.
PlanVerdict check_plan(const Domain& domain, const Problem& problem, const Plan& plan);

}  // namespace plansim::pddl
