#include "plansim/oracle/description.hpp"

#include "plansim/util/strings.hpp"

namespace plansim::oracle {

using worlds::Cell;
using worlds::GridScenario;
using worlds::Item;
using worlds::ItemKind;
using worlds::Pos;
using worlds::Variant;
using worlds::World;

namespace {

std::string pos_list(const std::vector<Pos>& positions) {
  std::vector<std::string> parts;
  parts.reserve(positions.size());
  for (const Pos& p : positions) parts.push_back("(" + p.name() + ")");
  return join(parts, ", ");
}

std::string paren(const Pos& p) { return "(" + p.name() + ")"; }

void describe_frozenlake(const GridScenario& sc, std::vector<DescriptionLine>* init,
                         std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + "."});
  const Pos goal_pos = *sc.find_cell(Cell::Goal);
  init->push_back({"The goal is at " + paren(goal_pos) + "."});
  const auto holes = sc.cells_of(Cell::Hole);
  if (!holes.empty()) init->push_back({"The ice holes are at " + pos_list(holes) + "."});
  goal->push_back({"The agent is at " + paren(goal_pos)});
}

void describe_maze(const GridScenario& sc, std::vector<DescriptionLine>* init,
                   std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + "."});
  const Pos goal_pos = *sc.find_cell(Cell::Goal);
  init->push_back({"The goal is at " + paren(goal_pos) + "."});
  const auto walls = sc.cells_of(Cell::Wall);
  if (!walls.empty()) init->push_back({"The walls are at " + pos_list(walls) + "."});
  goal->push_back({"The agent is at " + paren(goal_pos)});
}

void describe_sokoban(const GridScenario& sc, std::vector<DescriptionLine>* init,
                      std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + "."});
  std::vector<Pos> boxes;
  for (const auto& item : sc.items)
    if (item.on_grid()) boxes.push_back(item.pos);
  init->push_back({"The boxes are at " + pos_list(boxes) + "."});
  init->push_back({"The goal positions are at " + pos_list(sc.cells_of(Cell::Goal)) + "."});
  const auto walls = sc.cells_of(Cell::Wall);
  if (!walls.empty()) init->push_back({"The walls are at " + pos_list(walls) + "."});
  goal->push_back({"All the boxes are at the goal positions"});
}

void describe_package(const GridScenario& sc, std::vector<DescriptionLine>* init,
                      std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + " and facing " +
                   worlds::dir_name(sc.facing) + "."});
  std::vector<Pos> closed, open;
  for (const auto& item : sc.items) {
    if (!item.on_grid()) continue;
    (item.open ? open : closed).push_back(item.pos);
  }
  if (!closed.empty()) init->push_back({"The closed packages are at " + pos_list(closed) + "."});
  if (!open.empty()) init->push_back({"The open packages are at " + pos_list(open) + "."});
  if (auto carried = sc.carried_item())
    init->push_back({"The agent is carrying " + sc.items[*carried].name + "."});
  goal->push_back({"All the packages are open"});
}

void describe_printer(const GridScenario& sc, std::vector<DescriptionLine>* init,
                      std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + " and facing " +
                   worlds::dir_name(sc.facing) + "."});
  init->push_back({"The desk region cells are at " + pos_list(sc.cells_of(Cell::Desk)) + "."});
  for (const auto& item : sc.items) {
    const std::string state = item.powered ? "toggled on" : "toggled off";
    if (item.on_grid()) {
      init->push_back({"The printer is at " + paren(item.pos) + " and " + state + "."});
    } else if (item.loc == Item::Loc::Carried) {
      init->push_back({"The agent is carrying the printer, which is " + state + "."});
    }
  }
  goal->push_back({"The printer is in the desk region and toggled on"});
}

void describe_overcooked(const GridScenario& sc, std::vector<DescriptionLine>* init,
                         std::vector<DescriptionLine>* goal) {
  init->push_back({"The agent is at " + paren(sc.agent) + " and facing " +
                   worlds::dir_name(sc.facing) + "."});
  init->push_back({"The counters are at " + pos_list(sc.cells_of(Cell::Counter)) + "."});
  init->push_back({"The chopping board is at " + pos_list(sc.cells_of(Cell::Board)) + "."});
  init->push_back({"The delivery position is at " + pos_list(sc.cells_of(Cell::Delivery)) + "."});
  for (const auto& item : sc.items) {
    std::string label;
    switch (item.kind) {
      case ItemKind::Ingredient:
        label = (item.chopped ? "chopped " : "unchopped ") + item.name;
        break;
      case ItemKind::Plate: label = item.name; break;
      case ItemKind::Salad:
        if (item.delivered) continue;
        label = (item.plated ? "plated " : "merged ") + item.name;
        break;
      default: label = item.name; break;
    }
    if (item.on_grid()) {
      init->push_back({"The " + label + " is at " + paren(item.pos) + "."});
    } else if (item.loc == Item::Loc::Carried) {
      init->push_back({"The agent is carrying the " + label + "."});
    }
  }
  goal->push_back({"The salad is delivered to the delivery position"});
}

}  // namespace

std::string description_text(const std::vector<DescriptionLine>& initial,
                             const std::vector<DescriptionLine>& goal) {
  std::string out = "Initially:";
  for (const auto& line : initial) out += "\n- " + line.text;
  out += "\n\nYour goal is to achieve the following configuration:";
  for (const auto& line : goal) out += "\n- " + line.text;
  return out;
}

ScenarioDescription describe_scenario(const GridScenario& sc) {
  ScenarioDescription d;
  d.initial_lines.push_back(
      {"The size of the gridworld is " + std::to_string(sc.rows) + "x" + std::to_string(sc.cols) +
       "."});
  switch (sc.world) {
    case World::FrozenLake: describe_frozenlake(sc, &d.initial_lines, &d.goal_lines); break;
    case World::Maze: describe_maze(sc, &d.initial_lines, &d.goal_lines); break;
    case World::Sokoban: describe_sokoban(sc, &d.initial_lines, &d.goal_lines); break;
    case World::Package: describe_package(sc, &d.initial_lines, &d.goal_lines); break;
    case World::Printer: describe_printer(sc, &d.initial_lines, &d.goal_lines); break;
    case World::Overcooked: describe_overcooked(sc, &d.initial_lines, &d.goal_lines); break;
  }
  d.text = description_text(d.initial_lines, d.goal_lines);
  return d;
}

ScenarioDescription parse_description(const std::string& text) {
  ScenarioDescription d;
  enum class Section { Preamble, Initial, Goal } section = Section::Preamble;
  for (const auto& raw : split(text, '\n')) {
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line == "Initially:") {
      section = Section::Initial;
      continue;
    }
    if (line == "Your goal is to achieve the following configuration:") {
      section = Section::Goal;
      continue;
    }
    if (line.rfind("- ", 0) == 0) {
      if (section == Section::Initial) {
        d.initial_lines.push_back({line.substr(2)});
      } else if (section == Section::Goal) {
        d.goal_lines.push_back({line.substr(2)});
      } else {
        throw Error("description bullet before 'Initially:' header");
      }
    }
  }
  if (d.initial_lines.empty()) throw Error("description has no 'Initially:' bullets");
  if (d.goal_lines.empty()) throw Error("description has no goal-configuration bullets");
  d.text = description_text(d.initial_lines, d.goal_lines);
  return d;
}

std::string task_description(World w, Variant v) {
  // First sentence, then the coordinate convention, then the rest.
  static const char* kCoordinate =
      "The left upper corner is (pos-1-1) for (row, column) representation.";
  std::string first, rest;
  switch (w) {
    case World::FrozenLake:
      first = "In the scenario, you have a girdworld, where each cell can be either normal "
              "ground or ice holes.";
      rest = "The player starts at a cell, and there is a goal position in a cell. The goal is "
             "to move the player to the goal position. ";
      if (v == Variant::Base) {
        rest += "You can move up, down, left, right, but you cannot move into the border, and "
                "stepping into the ice hole will fail the game.";
      } else {
        rest += "You can move up, down, left, right, but you cannot move into the border. " +
                worlds::variant_rule_sentence(v);
      }
      break;
    case World::Maze:
      first = "In the scenario, you have a maze gridworld with walls and goal positions.";
      rest = "The player can move up, down, left, or right. If the player hits a wall or "
             "performs an invalid action, the action fails. The goal is to reach the goal cell.";
      break;
    case World::Sokoban:
      first = "In the scenario, you have a gridworld with walls, boxes, and goal positions.";
      rest = "The player can move, push the box to goal, and push the box to other position. "
             "The player can only push the box forward, not toward other directions. If the "
             "player hits a wall or performs an invalid action, the action fails. The goal is "
             "to push all boxes to reach the goal cells.";
      break;
    case World::Package:
      first = "In the scenario, you have a gridworld with some closed packages in it.";
      rest = "The player can turn-left, turn-right, move, pick-up, drop-down, open, or close "
             "the packages. If the player hits border or performs an invalid action, the "
             "action fails. The goal is to open all packages.";
      break;
    case World::Printer:
      first = "In the scenario, you have a gridworld with a desk region and a printer.";
      rest = "The player can turn-left, turn-right, move, pick-up, drop-down, toggle-on, or "
             "toggle-off the printer. The player cannot move into the desk region. If the "
             "player hits border, desk, or performs an invalid action, the action fails. The "
             "goal is to pickup and drop the printer in desk region and toggle it on.";
      break;
    case World::Overcooked:
      first = "In the scenario, you have a gridworld cooking game with counters, ingredients, "
              "chopping boards, and a goal position for delivery.";
      rest = "The players can move, chop, pick, drop, merge-ingredient, put-plate, deliver. If "
             "the player moves into the counter or performs an invalid action, the action "
             "fails. The goal is to cook the salad my merging chopped ingredients, put merged "
             "ingredients into plate, and put the plate to the delivery position.";
      break;
  }
  if (w != World::FrozenLake && v != Variant::Base)
    throw Error("rule variants only apply to frozenlake");
  return first + " " + std::string(kCoordinate) + " " + rest;
}

}  // namespace plansim::oracle
