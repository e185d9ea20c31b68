#include "plansim/worlds/sim_bfs.hpp"

#include <unordered_map>

#include "plansim/worlds/vocabulary.hpp"

namespace plansim::worlds {

namespace {

// Compact dynamic-state key. Static layout (walls, counters, desks) never
// changes, but R14 can move the goal cell, so the goal position is included.
std::string state_key(const GridScenario& sc) {
  std::string key;
  key.reserve(16 + sc.items.size() * 5);
  auto byte = [&](int v) { key.push_back(static_cast<char>(v)); };
  byte(sc.agent.row);
  byte(sc.agent.col);
  byte(static_cast<int>(sc.facing));
  byte(sc.failed ? 1 : 0);
  byte(sc.vstate.holes_visited > 250 ? 250 : sc.vstate.holes_visited);
  byte(sc.vstate.pending_count);
  byte(sc.vstate.repeat_latched ? 1 : 0);
  byte(sc.vstate.frozen ? 1 : 0);
  byte(static_cast<int>(sc.vstate.pending_action.size()));
  key += sc.vstate.pending_action;
  if (sc.world == World::FrozenLake) {
    if (auto goal = sc.find_cell(Cell::Goal)) {
      byte(goal->row);
      byte(goal->col);
    }
    byte(sc.start.row);
    byte(sc.start.col);
  }
  for (const auto& item : sc.items) {
    byte(static_cast<int>(item.loc));
    byte(item.on_grid() ? item.pos.row : 0);
    byte(item.on_grid() ? item.pos.col : 0);
    byte((item.open ? 1 : 0) | (item.powered ? 2 : 0) | (item.chopped ? 4 : 0) |
         (item.plated ? 8 : 0) | (item.delivered ? 16 : 0));
  }
  return key;
}

}  // namespace

SimBfsResult sim_shortest_plan(const GridScenario& sc, std::uint64_t node_cap) {
  SimBfsResult result;
  const auto& labels = action_labels(sc.world);

  struct Node {
    GridScenario state;
    std::int64_t parent;
    std::uint8_t via_label;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;

  auto reconstruct = [&](std::size_t idx) {
    std::vector<std::string> plan;
    for (std::int64_t at = static_cast<std::int64_t>(idx); nodes[at].parent >= 0;
         at = nodes[at].parent)
      plan.push_back(labels[nodes[at].via_label]);
    std::reverse(plan.begin(), plan.end());
    return plan;
  };

  nodes.push_back({sc, -1, 0});
  seen.emplace(state_key(sc), 0);
  if (!sc.failed && goal_reached(sc)) {
    result.plan = std::vector<std::string>{};
    return result;
  }

  std::size_t head = 0;
  while (head < nodes.size()) {
    if (result.expanded >= node_cap) {
      result.capped = true;
      return result;
    }
    const std::size_t current = head++;
    ++result.expanded;
    if (nodes[current].state.failed) continue;  // terminal, nothing useful follows
    for (std::size_t li = 0; li < labels.size(); ++li) {
      StepOutcome out = step(nodes[current].state, labels[li]);
      // Expand on state change rather than on `executed`: a skipped action
      // under the U5 freeze mechanic is not executed but still advances the
      // world, while bumps are pure self-loops.
      if (out.next == nodes[current].state) continue;
      auto key = state_key(out.next);
      auto [it, inserted] = seen.emplace(std::move(key), nodes.size());
      if (!inserted) continue;
      const bool done = !out.next.failed && goal_reached(out.next);
      nodes.push_back({std::move(out.next), static_cast<std::int64_t>(current),
                       static_cast<std::uint8_t>(li)});
      if (done) {
        result.plan = reconstruct(nodes.size() - 1);
        return result;
      }
    }
  }
  return result;
}

}  // namespace plansim::worlds
