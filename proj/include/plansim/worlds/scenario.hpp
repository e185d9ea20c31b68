#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plansim/util/error.hpp"

namespace plansim::worlds {

enum class World : std::uint8_t { FrozenLake, Maze, Sokoban, Package, Printer, Overcooked };

const char* world_name(World w);            // "frozenlake", "maze", ...
World world_from_name(const std::string&);  // accepts the same names

/// Static cell contents. Items that can move live in GridScenario::items.
enum class Cell : std::uint8_t { Ground, Hole, Wall, Goal, Desk, Counter, Board, Delivery };

enum class Dir : std::uint8_t { Up, Down, Left, Right };

const char* dir_name(Dir d);  // "up", "down", "left", "right"
Dir left_of(Dir d);
Dir right_of(Dir d);
Dir opposite(Dir d);

struct Pos {
  int row = 0;  // 1-indexed, row 1 is the top
  int col = 0;

  bool operator==(const Pos&) const = default;
  auto operator<=>(const Pos&) const = default;

  Pos moved(Dir d) const {
    switch (d) {
      case Dir::Up: return {row - 1, col};
      case Dir::Down: return {row + 1, col};
      case Dir::Left: return {row, col - 1};
      case Dir::Right: return {row, col + 1};
    }
    return *this;
  }

  /// "pos-2-3" naming used across PDDL files, descriptions and traces.
  std::string name() const { return "pos-" + std::to_string(row) + "-" + std::to_string(col); }
};

enum class ItemKind : std::uint8_t { Box, Package, Printer, Ingredient, Plate, Salad };

struct Item {
  enum class Loc : std::uint8_t { OnGrid, Carried, Gone };

  ItemKind kind;
  std::string name;  // object name in PDDL files and descriptions
  Pos pos;           // meaningful when loc == OnGrid
  Loc loc = Loc::OnGrid;
  bool open = false;       // packages
  bool powered = false;    // printer
  bool chopped = false;    // ingredients
  bool plated = false;     // salad
  bool delivered = false;  // salad

  bool on_grid() const { return loc == Loc::OnGrid; }
  bool operator==(const Item&) const = default;
};

/// FrozenLake rule variants. Base is the published behaviour; R1-R15 are the
/// training-time modifications and U1-U5 the held-out ones.
enum class Variant : std::uint8_t {
  Base,
  R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14, R15,
  U1, U2, U3, U4, U5,
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string&);
/// Natural-language rule sentence appended to the task description for
/// non-Base variants.
std::string variant_rule_sentence(Variant v);

/// Book-keeping for history-dependent rule variants.
struct VariantState {
  int holes_visited = 0;          // R1/R2/R6
  std::string pending_action;     // R5/R10/R11/U3 repeat mechanic
  int pending_count = 0;
  bool repeat_latched = false;    // R10/R11: repeat mode armed forever
  bool frozen = false;            // U5: next action is skipped

  bool operator==(const VariantState&) const = default;
};

/// Exact symbolic world state: the ground truth behind a rendered image.
struct GridScenario {
  World world = World::FrozenLake;
  int rows = 0, cols = 0;
  std::vector<Cell> cells;  // row-major, rows*cols entries
  Pos agent;
  Dir facing = Dir::Up;  // orientation worlds (Package/Printer/Overcooked)
  Pos start;             // initial agent cell (R4/R14 reference point)
  std::vector<Item> items;
  Variant variant = Variant::Base;
  std::string theme = "theme-1";
  std::uint64_t seed = 0;
  bool solvable = true;  // recorded by generate_map
  bool failed = false;   // a terminal failure has happened
  VariantState vstate;

  bool operator==(const GridScenario&) const = default;

  bool in_bounds(Pos p) const {
    return p.row >= 1 && p.row <= rows && p.col >= 1 && p.col <= cols;
  }
  Cell cell(Pos p) const { return cells[(p.row - 1) * cols + (p.col - 1)]; }
  void set_cell(Pos p, Cell c) { cells[(p.row - 1) * cols + (p.col - 1)] = c; }

  std::optional<std::size_t> item_at(Pos p) const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].on_grid() && items[i].pos == p) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> carried_item() const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].loc == Item::Loc::Carried) return i;
    return std::nullopt;
  }
  std::optional<Pos> find_cell(Cell kind) const {
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c)
        if (cell({r, c}) == kind) return Pos{r, c};
    return std::nullopt;
  }
  std::vector<Pos> cells_of(Cell kind) const {
    std::vector<Pos> out;
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c)
        if (cell({r, c}) == kind) out.push_back({r, c});
    return out;
  }

  std::string to_json() const;
  static GridScenario from_json(const std::string& text);
  /// One character per cell plus the agent; debugging aid.
  std::string to_ascii() const;
};

/// Whether the world uses agent orientation.
bool has_facing(World w);

}  // namespace plansim::worlds
