#include "plansim/worlds/step.hpp"

#include "plansim/worlds/vocabulary.hpp"

namespace plansim::worlds {

namespace {

constexpr const char* kInvalidReasoning =
    "The agent has already failed the game, so this execution is invalid.";

Dir move_dir(const std::string& label) {
  if (label == "move up") return Dir::Up;
  if (label == "move down") return Dir::Down;
  if (label == "move left") return Dir::Left;
  if (label == "move right") return Dir::Right;
  throw Error("not a movement action: '" + label + "'");
}

StepOutcome make_invalid(const GridScenario& sc) {
  StepOutcome out;
  out.result = StepOutcome::Result::Invalid;
  out.executed = false;
  out.reasoning = kInvalidReasoning;
  out.next = sc;
  return out;
}

StepOutcome stay(const GridScenario& sc, std::string reasoning) {
  StepOutcome out;
  out.result = StepOutcome::Result::Unsuccessful;
  out.executed = false;
  out.reasoning = std::move(reasoning);
  out.next = sc;
  return out;
}

std::string border_sentence(const std::string& dir, const Pos& from) {
  return "The agent tries to move " + dir + " from " + from.name() +
         ". This action is not valid as it is moving into the border. So the execution is "
         "unsuccessful and the agent stays at the original location.";
}

std::string tries_prefix(const std::string& dir, const Pos& from, const Pos& to) {
  return "The agent tries to move " + dir + " from " + from.name() + ", so it will move to " +
         to.name() + ". ";
}

// ---------------------------------------------------------------------------
// FrozenLake (Base plus rule variants R1-R15 and U1-U5)
// ---------------------------------------------------------------------------

int repeat_required(Variant v) {
  switch (v) {
    case Variant::R5:
    case Variant::R10: return 2;
    case Variant::R11:
    case Variant::U3: return 3;
    default: return 0;
  }
}

bool repeat_applies(const GridScenario& sc) {
  switch (sc.variant) {
    case Variant::R5:
    case Variant::U3: return sc.cell(sc.agent) == Cell::Hole;
    case Variant::R10:
    case Variant::R11: return sc.vstate.repeat_latched;
    default: return false;
  }
}

StepOutcome frozenlake_step(const GridScenario& sc, const std::string& label) {
  if (sc.failed) return make_invalid(sc);
  const Dir d = move_dir(label);
  const std::string dir = dir_name(d);
  const Variant v = sc.variant;
  StepOutcome out;
  out.next = sc;

  if (v == Variant::U5 && sc.vstate.frozen) {
    out.next.vstate.frozen = false;
    out.result = StepOutcome::Result::Unsuccessful;
    out.executed = false;
    out.reasoning = "The agent stepped on an ice hole and is frozen, so this action is skipped "
                    "and the agent stays at " + sc.agent.name() + ".";
    return out;
  }

  if (v == Variant::R15 && sc.cell(sc.agent) == Cell::Hole &&
      (d == Dir::Left || d == Dir::Right)) {
    return stay(sc, "The agent is on an ice hole at " + sc.agent.name() +
                        " and can only move up or down, so moving " + dir +
                        " is invalid and the agent stays at the original location.");
  }

  if (repeat_applies(sc)) {
    const int required = repeat_required(v);
    const int count = sc.vstate.pending_action == label ? sc.vstate.pending_count + 1 : 1;
    if (count < required) {
      out.next.vstate.pending_action = label;
      out.next.vstate.pending_count = count;
      out.result = StepOutcome::Result::Successful;
      out.executed = true;
      const std::string times = required == 2 ? "twice" : "three times";
      const std::string context =
          (v == Variant::R5 || v == Variant::U3)
              ? "The agent is on an ice hole, so the same action must be executed " + times +
                    " to actually execute it."
              : "The agent has stepped on an ice hole, so every action must be executed " +
                    times + " to actually execute it.";
      out.reasoning = context + " This is repetition " + std::to_string(count) + " of " +
                      std::to_string(required) + ", so the action does not take effect yet and "
                      "the agent stays at " + sc.agent.name() + ".";
      return out;
    }
    out.next.vstate.pending_action.clear();
    out.next.vstate.pending_count = 0;
  } else {
    out.next.vstate.pending_action.clear();
    out.next.vstate.pending_count = 0;
  }

  const Pos from = sc.agent;
  const Pos target = from.moved(d);
  if (!sc.in_bounds(target)) {
    out.result = StepOutcome::Result::Unsuccessful;
    out.executed = false;
    out.reasoning = border_sentence(dir, from);
    return out;
  }

  if (sc.cell(target) != Cell::Hole) {
    out.next.agent = target;
    out.result = StepOutcome::Result::Successful;
    out.executed = true;
    out.reasoning = tries_prefix(dir, from, target) + "There is no ice hole in cell " +
                    target.name() + " and the agent is not moving to the border, so no invalid "
                    "action is executed and the agent successfully moves to " + target.name() +
                    ".";
    return out;
  }

  // The target is an ice hole; the consequence depends on the rule variant.
  out.result = StepOutcome::Result::Successful;
  out.executed = true;
  switch (v) {
    case Variant::Base: {
      out.next.agent = target;
      out.next.failed = true;
      out.result = StepOutcome::Result::Unsuccessful;
      out.reasoning = tries_prefix(dir, from, target) + "Since there is an ice hole in cell " +
                      target.name() + ", the agent will fall into the ice hole, so the game "
                      "ended and the execution is unsuccessful.";
      return out;
    }
    case Variant::R1:
    case Variant::R2: {
      out.next.agent = target;
      out.next.vstate.holes_visited = sc.vstate.holes_visited + 1;
      const int n = out.next.vstate.holes_visited;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", but under the current rules stepping on an ice hole "
                      "does not fail the game, so the agent moves to " + target.name() +
                      ". The agent has now stepped on " + std::to_string(n) + " ice hole" +
                      (n == 1 ? "" : "s") + ".";
      return out;
    }
    case Variant::R3: {
      Pos other = target;
      for (const Pos& h : sc.cells_of(Cell::Hole))
        if (!(h == target)) other = h;
      out.next.agent = other;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ". The ice holes are teleports, so the agent teleports "
                      "from " + target.name() + " to the other ice hole at " + other.name() + ".";
      return out;
    }
    case Variant::R4: {
      out.next.agent = sc.start;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ". Ice holes teleport the agent back to the origin "
                      "position, so the agent teleports to " + sc.start.name() + ".";
      return out;
    }
    case Variant::R5:
    case Variant::U3: {
      out.next.agent = target;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent moves to " + target.name() +
                      ". While on the ice hole the agent must execute the same action " +
                      (v == Variant::R5 ? "twice" : "three times") + " to actually execute it.";
      return out;
    }
    case Variant::R6: {
      out.next.vstate.holes_visited = sc.vstate.holes_visited + 1;
      out.next.agent = target;
      if (out.next.vstate.holes_visited >= 2) {
        out.next.failed = true;
        out.result = StepOutcome::Result::Unsuccessful;
        out.reasoning = tries_prefix(dir, from, target) + "Since there is an ice hole in cell " +
                        target.name() + " and the agent has already used its extra life, the "
                        "agent will fall into the ice hole, so the game ended and the execution "
                        "is unsuccessful.";
      } else {
        out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                        target.name() + ". The agent has two lives, so stepping on the first "
                        "ice hole does not fail the game and the agent moves to " +
                        target.name() + ".";
      }
      return out;
    }
    case Variant::R7:
    case Variant::U1:
    case Variant::U4: {
      const int extra = v == Variant::U4 ? 3 : 2;
      Pos cur = target;
      for (int i = 0; i < extra; ++i) {
        Pos nxt = cur.moved(d);
        if (!sc.in_bounds(nxt)) break;
        cur = nxt;
      }
      out.next.agent = cur;
      const std::string mechanic =
          v == Variant::U1
              ? "The ice is wet, so the agent steps forward two steps in the same direction"
              : "Stepping on the ice hole unlocks a lucky rocket, so the agent steps forward " +
                    std::string(extra == 2 ? "two" : "three") + " steps in the same direction";
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ". " + mechanic + " and lands at " + cur.name() + ".";
      return out;
    }
    case Variant::R8: {
      Pos cur = target;
      while (sc.cell(cur) == Cell::Hole) {
        Pos nxt = cur.moved(d);
        if (!sc.in_bounds(nxt)) break;
        cur = nxt;
      }
      out.next.agent = cur;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ". The ice is slippery, so the agent slips in the same "
                      "direction and stops at " + cur.name() + ".";
      return out;
    }
    case Variant::R9: {
      if (d != Dir::Down) {
        return stay(sc, tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                            target.name() + ", and the agent can only step into an ice hole "
                            "from above, so the action is invalid and the agent stays at the "
                            "original location.");
      }
      out.next.agent = target;
      out.next.failed = true;
      out.result = StepOutcome::Result::Unsuccessful;
      out.reasoning = tries_prefix(dir, from, target) + "Since there is an ice hole in cell " +
                      target.name() + " and the agent enters it from above, the agent will "
                      "fall into the ice hole, so the game ended and the execution is "
                      "unsuccessful.";
      return out;
    }
    case Variant::R10:
    case Variant::R11: {
      out.next.agent = target;
      out.next.vstate.repeat_latched = true;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent moves to " + target.name() +
                      ". From now on the agent must execute actions " +
                      (v == Variant::R10 ? "twice" : "three times") +
                      " to actually execute them.";
      return out;
    }
    case Variant::R12: {
      Pos cur = target;
      while (sc.in_bounds(cur.moved(d))) cur = cur.moved(d);
      out.next.agent = cur;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent slides in the same direction until "
                      "hitting the wall and stops at " + cur.name() + ".";
      return out;
    }
    case Variant::R13: {
      const Dir rev = opposite(d);
      Pos cur = target;
      while (sc.in_bounds(cur.moved(rev))) cur = cur.moved(rev);
      out.next.agent = cur;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent bounces back until reaching the wall and "
                      "stops at " + cur.name() + ".";
      return out;
    }
    case Variant::R14: {
      const Pos old_goal = *sc.find_cell(Cell::Goal);
      const Pos old_start = sc.start;
      out.next.agent = target;
      out.next.set_cell(old_goal, Cell::Ground);
      out.next.set_cell(old_start, Cell::Goal);
      out.next.start = old_goal;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent moves to " + target.name() +
                      " and the goal and origin positions are swapped. The goal is now at " +
                      old_start.name() + ".";
      return out;
    }
    case Variant::R15: {
      out.next.agent = target;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent moves to " + target.name() +
                      ". While on an ice hole the agent can only move up or down.";
      return out;
    }
    case Variant::U2: {
      const Pos dest{2, 2};
      out.next.agent = dest;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ". Ice holes are teleports to pos-2-2, so the agent "
                      "teleports to pos-2-2.";
      return out;
    }
    case Variant::U5: {
      out.next.agent = target;
      out.next.vstate.frozen = true;
      out.reasoning = tries_prefix(dir, from, target) + "There is an ice hole in cell " +
                      target.name() + ", so the agent moves to " + target.name() +
                      " and freezes. The agent's next action will be skipped.";
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maze
// ---------------------------------------------------------------------------

StepOutcome maze_step(const GridScenario& sc, const std::string& label) {
  const Dir d = move_dir(label);
  const std::string dir = dir_name(d);
  const Pos from = sc.agent;
  const Pos target = from.moved(d);
  if (!sc.in_bounds(target)) return stay(sc, border_sentence(dir, from));
  if (sc.cell(target) == Cell::Wall) {
    return stay(sc, tries_prefix(dir, from, target) + "Since there is a wall in cell " +
                        target.name() + ", the action fails and the agent stays at the "
                        "original location.");
  }
  StepOutcome out;
  out.next = sc;
  out.next.agent = target;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;
  out.reasoning = tries_prefix(dir, from, target) + "There is no wall in cell " + target.name() +
                  " and the agent is not moving to the border, so the agent successfully moves "
                  "to " + target.name() + ".";
  return out;
}

// ---------------------------------------------------------------------------
// Sokoban
// ---------------------------------------------------------------------------

StepOutcome sokoban_step(const GridScenario& sc, const std::string& label) {
  const Dir d = move_dir(label);
  const std::string dir = dir_name(d);
  const Pos from = sc.agent;
  const Pos target = from.moved(d);
  if (!sc.in_bounds(target)) return stay(sc, border_sentence(dir, from));
  if (sc.cell(target) == Cell::Wall) {
    return stay(sc, tries_prefix(dir, from, target) + "Since there is a wall in cell " +
                        target.name() + ", the action fails and the agent stays at the "
                        "original location.");
  }
  StepOutcome out;
  out.next = sc;
  const auto box_idx = sc.item_at(target);
  if (!box_idx) {
    out.next.agent = target;
    out.result = StepOutcome::Result::Successful;
    out.executed = true;
    out.reasoning = tries_prefix(dir, from, target) + "There is no wall or box in cell " +
                    target.name() + " and the agent is not moving to the border, so the agent "
                    "successfully moves to " + target.name() + ".";
    return out;
  }
  const Pos behind = target.moved(d);
  std::string blocked;
  if (!sc.in_bounds(behind)) {
    blocked = "outside the border";
  } else if (sc.cell(behind) == Cell::Wall) {
    blocked = "into the wall at " + behind.name();
  } else if (sc.item_at(behind)) {
    blocked = "into the box at " + behind.name();
  }
  if (!blocked.empty()) {
    return stay(sc, tries_prefix(dir, from, target) + "There is a box in cell " + target.name() +
                        " but the box cannot be pushed " + blocked +
                        ", so the action fails and the agent stays at the original location.");
  }
  out.next.items[*box_idx].pos = behind;
  out.next.agent = target;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;
  out.reasoning = tries_prefix(dir, from, target) + "There is a box in cell " + target.name() +
                  " and the cell " + behind.name() + " behind it is free, so the agent pushes "
                  "the box to " + behind.name() + " and moves to " + target.name() + ".";
  return out;
}

// ---------------------------------------------------------------------------
// Package
// ---------------------------------------------------------------------------

StepOutcome turn_step(const GridScenario& sc, bool left) {
  StepOutcome out;
  out.next = sc;
  out.next.facing = left ? left_of(sc.facing) : right_of(sc.facing);
  out.result = StepOutcome::Result::Successful;
  out.executed = true;
  out.reasoning = std::string("The agent turns ") + (left ? "left" : "right") + " from facing " +
                  dir_name(sc.facing) + " to facing " + dir_name(out.next.facing) + ".";
  return out;
}

StepOutcome facing_move_step(const GridScenario& sc, bool desk_blocks) {
  const std::string f = dir_name(sc.facing);
  const Pos from = sc.agent;
  const Pos target = from.moved(sc.facing);
  if (!sc.in_bounds(target)) {
    return stay(sc, "The agent is facing " + f + " and tries to move from " + from.name() +
                        ". This action is not valid as it is moving into the border. So the "
                        "execution is unsuccessful and the agent stays at the original "
                        "location.");
  }
  if (desk_blocks && sc.cell(target) == Cell::Desk) {
    return stay(sc, "The agent is facing " + f + ", so it tries to move from " + from.name() +
                        " to " + target.name() + ". Since cell " + target.name() +
                        " is part of the desk region, the agent cannot move into it, so the "
                        "action fails and the agent stays at the original location.");
  }
  StepOutcome out;
  out.next = sc;
  out.next.agent = target;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;
  out.reasoning = "The agent is facing " + f + ", so it tries to move from " + from.name() +
                  " to " + target.name() + ". The agent is not moving into the border, so the "
                  "agent successfully moves to " + target.name() + ".";
  return out;
}

StepOutcome package_step(const GridScenario& sc, const std::string& label) {
  const Pos faced = sc.agent.moved(sc.facing);
  const bool faced_ok = sc.in_bounds(faced);
  const auto faced_item = faced_ok ? sc.item_at(faced) : std::nullopt;

  if (label == "turn left") return turn_step(sc, true);
  if (label == "turn right") return turn_step(sc, false);
  if (label == "move") return facing_move_step(sc, /*desk_blocks=*/false);

  StepOutcome out;
  out.next = sc;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;

  if (label == "open") {
    if (faced_item && !sc.items[*faced_item].open) {
      out.next.items[*faced_item].open = true;
      out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                      " and the closed package " + sc.items[*faced_item].name +
                      " is in the faced cell " + faced.name() + ", so the agent successfully "
                      "opens " + sc.items[*faced_item].name + ".";
      return out;
    }
    return stay(sc, "The agent tries to open a package, but there is no closed package in the "
                    "cell the agent is facing, so the action fails and nothing changes.");
  }
  if (label == "close") {
    if (faced_item && sc.items[*faced_item].open) {
      out.next.items[*faced_item].open = false;
      out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                      " and the open package " + sc.items[*faced_item].name +
                      " is in the faced cell " + faced.name() + ", so the agent successfully "
                      "closes " + sc.items[*faced_item].name + ".";
      return out;
    }
    return stay(sc, "The agent tries to close a package, but there is no open package in the "
                    "cell the agent is facing, so the action fails and nothing changes.");
  }
  if (label == "pick up") {
    if (sc.carried_item()) {
      return stay(sc, "The agent is already carrying something, so it cannot pick up another "
                      "package and the action fails.");
    }
    if (!faced_item) {
      return stay(sc, "The agent tries to pick up a package, but there is no package in the "
                      "cell the agent is facing, so the action fails and nothing changes.");
    }
    out.next.items[*faced_item].loc = Item::Loc::Carried;
    out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                    " and the package " + sc.items[*faced_item].name + " is in the faced cell " +
                    faced.name() + ", and the agent is not carrying anything, so the agent "
                    "picks up " + sc.items[*faced_item].name + ".";
    return out;
  }
  if (label == "drop down") {
    const auto carried = sc.carried_item();
    if (!carried) {
      return stay(sc, "The agent is not carrying anything, so there is nothing to drop down "
                      "and the action fails.");
    }
    if (!faced_ok || faced_item) {
      return stay(sc, "The agent tries to drop down, but the faced cell is not an empty cell "
                      "inside the grid, so the action fails and nothing changes.");
    }
    out.next.items[*carried].loc = Item::Loc::OnGrid;
    out.next.items[*carried].pos = faced;
    out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                    " and carries " + sc.items[*carried].name + ", and the faced cell " +
                    faced.name() + " is empty, so the agent drops " + sc.items[*carried].name +
                    " at " + faced.name() + ".";
    return out;
  }
  throw Error("action '" + label + "' is not in the package vocabulary");
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

StepOutcome printer_step(const GridScenario& sc, const std::string& label) {
  const Pos faced = sc.agent.moved(sc.facing);
  const bool faced_ok = sc.in_bounds(faced);
  const auto faced_item = faced_ok ? sc.item_at(faced) : std::nullopt;

  if (label == "turn left") return turn_step(sc, true);
  if (label == "turn right") return turn_step(sc, false);
  if (label == "move") return facing_move_step(sc, /*desk_blocks=*/true);

  StepOutcome out;
  out.next = sc;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;

  if (label == "pick up") {
    if (sc.carried_item()) {
      return stay(sc, "The agent is already carrying something, so it cannot pick up the "
                      "printer and the action fails.");
    }
    if (!faced_item) {
      return stay(sc, "The agent tries to pick up the printer, but there is no printer in the "
                      "cell the agent is facing, so the action fails and nothing changes.");
    }
    out.next.items[*faced_item].loc = Item::Loc::Carried;
    out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                    " and the printer is in the faced cell " + faced.name() + ", and the agent "
                    "is not carrying anything, so the agent picks up the printer.";
    return out;
  }
  if (label == "drop down") {
    const auto carried = sc.carried_item();
    if (!carried) {
      return stay(sc, "The agent is not carrying anything, so there is nothing to drop down "
                      "and the action fails.");
    }
    if (!faced_ok || faced_item) {
      return stay(sc, "The agent tries to drop down, but the faced cell is not an empty cell "
                      "inside the grid, so the action fails and nothing changes.");
    }
    out.next.items[*carried].loc = Item::Loc::OnGrid;
    out.next.items[*carried].pos = faced;
    const bool onto_desk = sc.cell(faced) == Cell::Desk;
    out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                    " and carries the printer, so the agent drops the printer at " +
                    faced.name() + (onto_desk ? ", which is in the desk region." : ".");
    return out;
  }
  if (label == "toggle on" || label == "toggle off") {
    const bool want_on = label == "toggle on";
    if (faced_item && sc.items[*faced_item].powered != want_on) {
      out.next.items[*faced_item].powered = want_on;
      out.reasoning = "The agent at " + sc.agent.name() + " is facing " + dir_name(sc.facing) +
                      " and the printer in the faced cell " + faced.name() + " is currently " +
                      (want_on ? "off" : "on") + ", so the agent toggles the printer " +
                      (want_on ? "on" : "off") + ".";
      return out;
    }
    return stay(sc, std::string("The agent tries to toggle ") + (want_on ? "on" : "off") +
                        " the printer, but there is no printer that is " +
                        (want_on ? "off" : "on") + " in the cell the agent is facing, so the "
                        "action fails and nothing changes.");
  }
  throw Error("action '" + label + "' is not in the printer vocabulary");
}

// ---------------------------------------------------------------------------
// Overcooked
// ---------------------------------------------------------------------------

bool counter_like(Cell c) { return c == Cell::Counter || c == Cell::Board || c == Cell::Delivery; }

StepOutcome overcooked_step(const GridScenario& sc, const std::string& label) {
  StepOutcome out;
  out.next = sc;
  out.result = StepOutcome::Result::Successful;
  out.executed = true;

  if (label.rfind("move ", 0) == 0) {
    const Dir d = move_dir(label);
    const std::string dir = dir_name(d);
    const Pos from = sc.agent;
    const Pos target = from.moved(d);
    if (!sc.in_bounds(target)) return stay(sc, border_sentence(dir, from));
    if (counter_like(sc.cell(target))) {
      return stay(sc, tries_prefix(dir, from, target) + "Since there is a counter in cell " +
                          target.name() + ", the agent cannot move into it, so the action "
                          "fails and the agent stays at the original location.");
    }
    out.next.agent = target;
    out.next.facing = d;
    out.reasoning = tries_prefix(dir, from, target) + "There is no counter in cell " +
                    target.name() + " and the agent is not moving to the border, so the agent "
                    "successfully moves to " + target.name() + " and faces " + dir + ".";
    return out;
  }

  const Pos faced = sc.agent.moved(sc.facing);
  const bool faced_ok = sc.in_bounds(faced);
  const auto faced_item = faced_ok ? sc.item_at(faced) : std::nullopt;
  const auto carried = sc.carried_item();

  if (label == "chop") {
    if (faced_ok && faced_item && sc.cell(faced) == Cell::Board &&
        sc.items[*faced_item].kind == ItemKind::Ingredient && !sc.items[*faced_item].chopped) {
      out.next.items[*faced_item].chopped = true;
      out.reasoning = "The agent is facing the chopping board at " + faced.name() +
                      " where the unchopped " + sc.items[*faced_item].name +
                      " is placed, so the agent chops the " + sc.items[*faced_item].name + ".";
      return out;
    }
    return stay(sc, "The agent tries to chop, but there is no unchopped ingredient on a "
                    "chopping board in the faced cell, so the action fails and nothing "
                    "changes.");
  }
  if (label == "pick") {
    if (carried) {
      return stay(sc, "The agent is already carrying something, so it cannot pick another item "
                      "and the action fails.");
    }
    if (!faced_item) {
      return stay(sc, "The agent tries to pick, but there is no item in the cell the agent is "
                      "facing, so the action fails and nothing changes.");
    }
    out.next.items[*faced_item].loc = Item::Loc::Carried;
    out.reasoning = "The agent picks up " + sc.items[*faced_item].name + " from the faced cell " +
                    faced.name() + ".";
    return out;
  }
  if (label == "drop") {
    if (!carried) {
      return stay(sc, "The agent is not carrying anything, so there is nothing to drop and the "
                      "action fails.");
    }
    if (!faced_ok || !counter_like(sc.cell(faced)) || faced_item) {
      return stay(sc, "The agent tries to drop, but the faced cell is not an empty counter, so "
                      "the action fails and nothing changes.");
    }
    out.next.items[*carried].loc = Item::Loc::OnGrid;
    out.next.items[*carried].pos = faced;
    out.reasoning = "The agent drops " + sc.items[*carried].name + " onto the counter at " +
                    faced.name() + ".";
    return out;
  }
  if (label == "merge ingredient") {
    const bool carried_ok = carried && sc.items[*carried].kind == ItemKind::Ingredient &&
                            sc.items[*carried].chopped;
    const bool faced_ing = faced_item && sc.items[*faced_item].kind == ItemKind::Ingredient &&
                           sc.items[*faced_item].chopped;
    if (!carried_ok || !faced_ing) {
      return stay(sc, "The agent tries to merge ingredients, but it must carry a chopped "
                      "ingredient and face another chopped ingredient, so the action fails and "
                      "nothing changes.");
    }
    std::size_t salad = sc.items.size();
    for (std::size_t i = 0; i < sc.items.size(); ++i)
      if (sc.items[i].kind == ItemKind::Salad) salad = i;
    if (salad == sc.items.size()) {
      return stay(sc, "The agent tries to merge ingredients, but there is no salad to prepare "
                      "in this scenario, so the action fails and nothing changes.");
    }
    const std::string a = sc.items[*carried].name;
    const std::string b = sc.items[*faced_item].name;
    out.next.items[*carried].loc = Item::Loc::Gone;
    out.next.items[*faced_item].loc = Item::Loc::Gone;
    out.next.items[salad].loc = Item::Loc::OnGrid;
    out.next.items[salad].pos = faced;
    out.reasoning = "The agent carries the chopped " + a + " and the faced cell " + faced.name() +
                    " holds the chopped " + b + ", so the agent merges them into " +
                    sc.items[salad].name + " at " + faced.name() + ".";
    return out;
  }
  if (label == "put plate") {
    const bool carried_salad = carried && sc.items[*carried].kind == ItemKind::Salad &&
                               !sc.items[*carried].plated;
    const bool faced_plate = faced_item && sc.items[*faced_item].kind == ItemKind::Plate;
    if (!carried_salad || !faced_plate) {
      return stay(sc, "The agent tries to put the salad on a plate, but it must carry the "
                      "merged salad and face a plate, so the action fails and nothing "
                      "changes.");
    }
    out.next.items[*faced_item].loc = Item::Loc::Gone;  // the plate now holds the salad
    out.next.items[*carried].loc = Item::Loc::OnGrid;
    out.next.items[*carried].pos = faced;
    out.next.items[*carried].plated = true;
    out.reasoning = "The agent carries " + sc.items[*carried].name + " and the faced cell " +
                    faced.name() + " holds " + sc.items[*faced_item].name + ", so the agent "
                    "puts the salad on the plate.";
    return out;
  }
  if (label == "deliver") {
    const bool carried_plated = carried && sc.items[*carried].kind == ItemKind::Salad &&
                                sc.items[*carried].plated;
    if (!carried_plated || !faced_ok || sc.cell(faced) != Cell::Delivery) {
      return stay(sc, "The agent tries to deliver, but it must carry the plated salad and face "
                      "the delivery position, so the action fails and nothing changes.");
    }
    out.next.items[*carried].loc = Item::Loc::Gone;
    out.next.items[*carried].delivered = true;
    out.reasoning = "The agent carries the plated " + sc.items[*carried].name +
                    " and faces the delivery position at " + faced.name() + ", so the agent "
                    "delivers the salad.";
    return out;
  }
  throw Error("action '" + label + "' is not in the overcooked vocabulary");
}

}  // namespace

const char* result_name(StepOutcome::Result r) {
  switch (r) {
    case StepOutcome::Result::Successful: return "Successful";
    case StepOutcome::Result::Unsuccessful: return "Unsuccessful";
    case StepOutcome::Result::Invalid: return "Invalid";
  }
  return "?";
}

StepOutcome step(const GridScenario& sc, const std::string& label) {
  if (!is_legal_label(sc.world, label))
    throw Error("action '" + label + "' is not in the " + world_name(sc.world) + " vocabulary");
  switch (sc.world) {
    case World::FrozenLake: return frozenlake_step(sc, label);
    case World::Maze: return maze_step(sc, label);
    case World::Sokoban: return sokoban_step(sc, label);
    case World::Package: return package_step(sc, label);
    case World::Printer: return printer_step(sc, label);
    case World::Overcooked: return overcooked_step(sc, label);
  }
  throw Error("unhandled world");
}

ExecutionTrace run_sequence(const GridScenario& sc, const ActionSeq& seq) {
  if (seq.actions.empty()) throw Error("action sequence must not be empty");
  ExecutionTrace trace;
  GridScenario cur = sc;
  for (const auto& label : seq.actions) {
    StepOutcome out = step(cur, label);
    trace.steps.push_back({label, out.reasoning, out.result, out.executed});
    cur = std::move(out.next);
  }
  trace.goal_reached = !cur.failed && goal_reached(cur);
  trace.final_state = std::move(cur);
  return trace;
}

bool goal_reached(const GridScenario& sc) {
  if (sc.failed) return false;
  switch (sc.world) {
    case World::FrozenLake: {
      if (sc.cell(sc.agent) != Cell::Goal) return false;
      if (sc.variant == Variant::R1) return sc.vstate.holes_visited >= 1;
      if (sc.variant == Variant::R2) return sc.vstate.holes_visited >= 2;
      return true;
    }
    case World::Maze: return sc.cell(sc.agent) == Cell::Goal;
    case World::Sokoban: {
      for (const auto& item : sc.items)
        if (item.kind == ItemKind::Box && (!item.on_grid() || sc.cell(item.pos) != Cell::Goal))
          return false;
      return true;
    }
    case World::Package: {
      for (const auto& item : sc.items)
        if (item.kind == ItemKind::Package && !item.open) return false;
      return true;
    }
    case World::Printer: {
      for (const auto& item : sc.items)
        if (item.kind == ItemKind::Printer)
          return item.on_grid() && sc.cell(item.pos) == Cell::Desk && item.powered;
      return false;
    }
    case World::Overcooked: {
      for (const auto& item : sc.items)
        if (item.kind == ItemKind::Salad) return item.delivered;
      return false;
    }
  }
  return false;
}

std::vector<std::string> executed_labels(const GridScenario& sc) {
  std::vector<std::string> out;
  for (const auto& label : action_labels(sc.world))
    if (step(sc, label).executed) out.push_back(label);
  return out;
}

}  // namespace plansim::worlds
