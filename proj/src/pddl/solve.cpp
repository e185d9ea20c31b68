#include "plansim/pddl/solve.hpp"

#include <unordered_map>

namespace plansim::pddl {

SolveResult solve(const CompiledTask& task, std::uint64_t budget) {
  SolveResult result;
  if (task.goal_impossible()) {
    result.status = SolveResult::Status::Unsolvable;
    return result;
  }

  struct Node {
    StateBits state;
    std::int64_t parent;
    std::size_t via_instance;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateBits, std::size_t, StateBits::Hash> seen;

  auto reconstruct = [&](std::size_t idx) {
    Plan plan;
    for (std::int64_t at = static_cast<std::int64_t>(idx); nodes[at].parent >= 0;
         at = nodes[at].parent)
      plan.steps.push_back(task.instances()[nodes[at].via_instance].to_action());
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
  };

  nodes.push_back({task.initial(), -1, 0});
  seen.emplace(task.initial(), 0);
  if (task.goal_satisfied(task.initial())) {
    result.status = SolveResult::Status::Solved;
    result.plan = {};
    return result;
  }

  std::size_t head = 0;
  while (head < nodes.size()) {
    if (result.expanded >= budget) {
      result.status = SolveResult::Status::BudgetExhausted;
      return result;
    }
    const std::size_t current = head++;
    ++result.expanded;
    const StateBits state = nodes[current].state;
    for (std::size_t i = 0; i < task.instances().size(); ++i) {
      if (!task.applicable(state, i)) continue;
      StateBits next = task.apply(state, i);
      auto [it, inserted] = seen.emplace(next, nodes.size());
      if (!inserted) continue;
      nodes.push_back({std::move(next), static_cast<std::int64_t>(current), i});
      if (task.goal_satisfied(nodes.back().state)) {
        result.status = SolveResult::Status::Solved;
        result.plan = reconstruct(nodes.size() - 1);
        return result;
      }
    }
  }
  result.status = SolveResult::Status::Unsolvable;
  return result;
}

SolveResult solve(const Domain& domain, const Problem& problem, std::uint64_t budget) {
  CompiledTask task(domain, problem);
  return solve(task, budget);
}

PlanVerdict check_plan(const Domain& domain, const Problem& problem, const Plan& plan) {
  PlanVerdict verdict;
  GroundState state = initial_state(problem);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const GroundAction& step = plan.steps[i];
    const ActionSchema* schema = domain.find_action(step.name);
    if (!schema) {
      verdict.failed_step = static_cast<int>(i);
      verdict.reason = "unknown action '" + step.name + "'";
      return verdict;
    }
    if (schema->params.size() != step.args.size()) {
      verdict.failed_step = static_cast<int>(i);
      verdict.reason = "arity mismatch for " + step.to_string();
      return verdict;
    }
    auto next = try_apply(domain, state, step);
    if (!next) {
      verdict.failed_step = static_cast<int>(i);
      verdict.reason = "inapplicable action " + step.to_string();
      return verdict;
    }
    state = std::move(*next);
  }
  if (!goal_satisfied(problem, state)) {
    verdict.failed_step = static_cast<int>(plan.steps.size());
    verdict.reason = "goal not satisfied in final state";
    return verdict;
  }
  verdict.valid = true;
  return verdict;
}

}  // namespace plansim::pddl
