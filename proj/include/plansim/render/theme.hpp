#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plansim/util/error.hpp"

namespace plansim::render {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// Simple glyph shapes drawn over a tile's background color.
enum class Glyph : std::uint8_t {
  None,
  Solid,     // fill the inner area
  Circle,
  Diamond,
  Cross,
  Triangle,
  Ring,
  Bars,      // two horizontal bars
  Checker,
};

/// Everything drawable in a tile: static cell roles, item states and the
/// agent marker.
enum class TileRole : std::uint8_t {
  Ground, Hole, Wall, GoalCell, Desk, Counter, Board, Delivery,
  Box, PackageClosed, PackageOpen, PrinterOff, PrinterOn,
  IngredientARaw, IngredientAChopped, IngredientBRaw, IngredientBChopped,
  Plate, Salad, SaladPlated, Agent,
};

const char* tile_role_name(TileRole role);
TileRole tile_role_from_name(const std::string& name);

struct RoleStyle {
  Rgb background;
  Glyph glyph = Glyph::None;
  Rgb glyph_color;

  bool operator==(const RoleStyle&) const = default;
};

/// A parametric appearance: per-role styles plus the tile size in pixels.
struct Theme {
  std::string id;
  int tile_size = 32;  // >= 16
  std::map<TileRole, RoleStyle> styles;

  const RoleStyle& style(TileRole role) const;

  std::string to_json() const;
  static Theme from_json(const std::string& text);
};

/// The built-in appearance set: theme-1 .. theme-6. The last theme is the
/// held-out ("unseen") appearance of each world's dataset split.
const std::vector<Theme>& builtin_themes();
const Theme& theme_by_id(const std::string& id);

/// Seen themes per world (Overcooked trains on four appearances, the other
/// worlds on five); the unseen theme is theme-6 everywhere.
std::vector<std::string> seen_theme_ids(int seen_count);
std::string unseen_theme_id();

}  // namespace plansim::render
