#include "plansim/worlds/scenario.hpp"

#include <array>
#include <json.hpp>

#include "plansim/util/strings.hpp"

namespace plansim::worlds {

using nlohmann::json;

const char* world_name(World w) {
  switch (w) {
    case World::FrozenLake: return "frozenlake";
    case World::Maze: return "maze";
    case World::Sokoban: return "sokoban";
    case World::Package: return "package";
    case World::Printer: return "printer";
    case World::Overcooked: return "overcooked";
  }
  return "?";
}

World world_from_name(const std::string& name) {
  const std::string n = to_lower(name);
  for (World w : {World::FrozenLake, World::Maze, World::Sokoban, World::Package, World::Printer,
                  World::Overcooked})
    if (n == world_name(w)) return w;
  throw Error("unknown world '" + name + "'");
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Up: return "up";
    case Dir::Down: return "down";
    case Dir::Left: return "left";
    case Dir::Right: return "right";
  }
  return "?";
}

Dir left_of(Dir d) {
  switch (d) {
    case Dir::Up: return Dir::Left;
    case Dir::Left: return Dir::Down;
    case Dir::Down: return Dir::Right;
    case Dir::Right: return Dir::Up;
  }
  return d;
}

Dir right_of(Dir d) { return left_of(left_of(left_of(d))); }

Dir opposite(Dir d) { return left_of(left_of(d)); }

bool has_facing(World w) {
  return w == World::Package || w == World::Printer || w == World::Overcooked;
}

const char* variant_name(Variant v) {
  static const std::array<const char*, 21> names = {
      "base", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "r10",
      "r11", "r12", "r13", "r14", "r15", "u1", "u2", "u3", "u4", "u5"};
  return names[static_cast<std::size_t>(v)];
}

Variant variant_from_name(const std::string& name) {
  const std::string n = to_lower(name);
  for (int i = 0; i <= static_cast<int>(Variant::U5); ++i) {
    Variant v = static_cast<Variant>(i);
    if (n == variant_name(v)) return v;
  }
  throw Error("unknown rule variant '" + name + "'");
}

std::string variant_rule_sentence(Variant v) {
  switch (v) {
    case Variant::Base:
      return "";
    case Variant::R1:
      return "Ice holes do not result in failure. Instead, the agent must step on one ice hole "
             "once as a precondition for game completion.";
    case Variant::R2:
      return "Ice holes do not result in failure. Instead, the agent must step on two ice holes "
             "as a precondition for game completion.";
    case Variant::R3:
      return "Ice holes function as teleports. There are two ice holes in the scenario that "
             "allow teleportation between each other.";
    case Variant::R4:
      return "Ice holes function as teleports. Any ice hole allows the agent to teleport back "
             "to the origin position.";
    case Variant::R5:
      return "If the agent steps on an ice hole, it must execute the same action twice to "
             "actually execute it.";
    case Variant::R6:
      return "The agent has two lives. It does not fail when stepping on the first ice hole, "
             "but fails the game when stepping on the second one.";
    case Variant::R7:
      return "Stepping on an ice hole unlocks a lucky rocket, allowing the agent to step "
             "forward two steps in the same direction.";
    case Variant::R8:
      return "Ice is slippery. If the agent steps on ice and the next cell in the same "
             "direction is also ice, the agent slips to the second ice position, continuing to "
             "slip until reaching a non-ice position.";
    case Variant::R9:
      return "The agent can only step into an ice hole if entering from above. Stepping in "
             "from other directions is invalid.";
    case Variant::R10:
      return "After stepping on an ice hole, the agent must always execute actions twice to "
             "actually execute them.";
    case Variant::R11:
      return "After stepping on an ice hole, the agent must always execute actions three times "
             "to actually execute them.";
    case Variant::R12:
      return "If the agent steps onto ice, it slides in that direction until hitting a wall.";
    case Variant::R13:
      return "If the agent steps onto ice, it bounces back until reaching a wall instead of "
             "sliding forward.";
    case Variant::R14:
      return "Stepping on an ice hole swaps the goal and origin positions.";
    case Variant::R15:
      return "The agent can only move up or down when on ice holes.";
    case Variant::U1:
      return "Since ice is wet, stepping on an ice hole causes the agent to step forward two "
             "steps in the same direction.";
    case Variant::U2:
      return "Ice holes are teleports to pos-2-2.";
    case Variant::U3:
      return "If you step on an ice hole, you have to execute the same actions three times to "
             "actually execute it.";
    case Variant::U4:
      return "Stepping on an ice hole unlocks a lucky rocket, where you can step forward three "
             "steps in the same direction.";
    case Variant::U5:
      return "If you step on an ice hole, you freeze and your next action is skipped.";
  }
  return "";
}

namespace {

const char* cell_name(Cell c) {
  switch (c) {
    case Cell::Ground: return "ground";
    case Cell::Hole: return "hole";
    case Cell::Wall: return "wall";
    case Cell::Goal: return "goal";
    case Cell::Desk: return "desk";
    case Cell::Counter: return "counter";
    case Cell::Board: return "board";
    case Cell::Delivery: return "delivery";
  }
  return "?";
}

Cell cell_from_name(const std::string& n) {
  for (Cell c : {Cell::Ground, Cell::Hole, Cell::Wall, Cell::Goal, Cell::Desk, Cell::Counter,
                 Cell::Board, Cell::Delivery})
    if (n == cell_name(c)) return c;
  throw Error("unknown cell kind '" + n + "'");
}

const char* item_kind_name(ItemKind k) {
  switch (k) {
    case ItemKind::Box: return "box";
    case ItemKind::Package: return "package";
    case ItemKind::Printer: return "printer";
    case ItemKind::Ingredient: return "ingredient";
    case ItemKind::Plate: return "plate";
    case ItemKind::Salad: return "salad";
  }
  return "?";
}

ItemKind item_kind_from_name(const std::string& n) {
  for (ItemKind k : {ItemKind::Box, ItemKind::Package, ItemKind::Printer, ItemKind::Ingredient,
                     ItemKind::Plate, ItemKind::Salad})
    if (n == item_kind_name(k)) return k;
  throw Error("unknown item kind '" + n + "'");
}

const char* loc_name(Item::Loc l) {
  switch (l) {
    case Item::Loc::OnGrid: return "grid";
    case Item::Loc::Carried: return "carried";
    case Item::Loc::Gone: return "gone";
  }
  return "?";
}

Item::Loc loc_from_name(const std::string& n) {
  for (Item::Loc l : {Item::Loc::OnGrid, Item::Loc::Carried, Item::Loc::Gone})
    if (n == loc_name(l)) return l;
  throw Error("unknown item location '" + n + "'");
}

}  // namespace

std::string GridScenario::to_json() const {
  json j;
  j["world"] = world_name(world);
  j["rows"] = rows;
  j["cols"] = cols;
  json grid = json::array();
  for (int r = 1; r <= rows; ++r) {
    json row = json::array();
    for (int c = 1; c <= cols; ++c) row.push_back(cell_name(cell({r, c})));
    grid.push_back(row);
  }
  j["cells"] = grid;
  j["agent"] = {{"row", agent.row}, {"col", agent.col}};
  if (has_facing(world)) j["facing"] = dir_name(facing);
  j["start"] = {{"row", start.row}, {"col", start.col}};
  json items_j = json::array();
  for (const auto& item : items) {
    json ij;
    ij["kind"] = item_kind_name(item.kind);
    ij["name"] = item.name;
    ij["loc"] = loc_name(item.loc);
    if (item.on_grid()) ij["pos"] = {{"row", item.pos.row}, {"col", item.pos.col}};
    if (item.kind == ItemKind::Package) ij["open"] = item.open;
    if (item.kind == ItemKind::Printer) ij["powered"] = item.powered;
    if (item.kind == ItemKind::Ingredient) ij["chopped"] = item.chopped;
    if (item.kind == ItemKind::Salad) {
      ij["plated"] = item.plated;
      ij["delivered"] = item.delivered;
    }
    items_j.push_back(ij);
  }
  j["items"] = items_j;
  j["variant"] = variant_name(variant);
  j["theme"] = theme;
  j["seed"] = seed;
  j["solvable"] = solvable;
  j["failed"] = failed;
  if (vstate != VariantState{}) {
    j["vstate"] = {{"holes_visited", vstate.holes_visited},
                   {"pending_action", vstate.pending_action},
                   {"pending_count", vstate.pending_count},
                   {"repeat_latched", vstate.repeat_latched},
                   {"frozen", vstate.frozen}};
  }
  return j.dump(2);
}

GridScenario GridScenario::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("scenario JSON parse error: ") + e.what());
  }
  try {
    GridScenario sc;
    sc.world = world_from_name(j.at("world").get<std::string>());
    sc.rows = j.at("rows").get<int>();
    sc.cols = j.at("cols").get<int>();
    if (sc.rows < 2 || sc.cols < 2 || sc.rows > 8 || sc.cols > 8)
      throw Error("scenario grid must be between 2x2 and 8x8");
    sc.cells.assign(static_cast<std::size_t>(sc.rows * sc.cols), Cell::Ground);
    const json& grid = j.at("cells");
    for (int r = 1; r <= sc.rows; ++r)
      for (int c = 1; c <= sc.cols; ++c)
        sc.set_cell({r, c}, cell_from_name(grid.at(r - 1).at(c - 1).get<std::string>()));
    sc.agent = {j.at("agent").at("row").get<int>(), j.at("agent").at("col").get<int>()};
    if (!sc.in_bounds(sc.agent)) throw Error("agent position out of bounds");
    if (j.contains("facing")) {
      const std::string f = j["facing"].get<std::string>();
      for (Dir d : {Dir::Up, Dir::Down, Dir::Left, Dir::Right})
        if (f == dir_name(d)) sc.facing = d;
    }
    sc.start = j.contains("start")
                   ? Pos{j["start"].at("row").get<int>(), j["start"].at("col").get<int>()}
                   : sc.agent;
    if (j.contains("items")) {
      for (const auto& ij : j["items"]) {
        Item item;
        item.kind = item_kind_from_name(ij.at("kind").get<std::string>());
        item.name = ij.at("name").get<std::string>();
        item.loc = ij.contains("loc") ? loc_from_name(ij["loc"].get<std::string>())
                                      : Item::Loc::OnGrid;
        if (item.on_grid())
          item.pos = {ij.at("pos").at("row").get<int>(), ij.at("pos").at("col").get<int>()};
        item.open = ij.value("open", false);
        item.powered = ij.value("powered", false);
        item.chopped = ij.value("chopped", false);
        item.plated = ij.value("plated", false);
        item.delivered = ij.value("delivered", false);
        sc.items.push_back(item);
      }
    }
    if (j.contains("variant")) sc.variant = variant_from_name(j["variant"].get<std::string>());
    sc.theme = j.value("theme", std::string("theme-1"));
    sc.seed = j.value("seed", std::uint64_t{0});
    sc.solvable = j.value("solvable", true);
    sc.failed = j.value("failed", false);
    if (j.contains("vstate")) {
      const json& v = j["vstate"];
      sc.vstate.holes_visited = v.value("holes_visited", 0);
      sc.vstate.pending_action = v.value("pending_action", std::string());
      sc.vstate.pending_count = v.value("pending_count", 0);
      sc.vstate.repeat_latched = v.value("repeat_latched", false);
      sc.vstate.frozen = v.value("frozen", false);
    }
    return sc;
  } catch (const json::exception& e) {
    throw Error(std::string("scenario JSON is missing fields: ") + e.what());
  }
}

std::string GridScenario::to_ascii() const {
  std::string out;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      Pos p{r, c};
      char ch = '.';
      switch (cell(p)) {
        case Cell::Ground: ch = '.'; break;
        case Cell::Hole: ch = 'O'; break;
        case Cell::Wall: ch = '#'; break;
        case Cell::Goal: ch = 'G'; break;
        case Cell::Desk: ch = 'D'; break;
        case Cell::Counter: ch = '#'; break;
        case Cell::Board: ch = 'B'; break;
        case Cell::Delivery: ch = 'X'; break;
      }
      if (auto idx = item_at(p)) {
        switch (items[*idx].kind) {
          case ItemKind::Box: ch = 'b'; break;
          case ItemKind::Package: ch = items[*idx].open ? 'o' : 'p'; break;
          case ItemKind::Printer: ch = 'P'; break;
          case ItemKind::Ingredient: ch = items[*idx].chopped ? 'i' : 'I'; break;
          case ItemKind::Plate: ch = 'u'; break;
          case ItemKind::Salad: ch = 's'; break;
        }
      }
      if (agent == p) ch = 'A';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

}  // namespace plansim::worlds
