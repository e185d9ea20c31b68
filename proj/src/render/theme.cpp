#include "plansim/render/theme.hpp"

#include <json.hpp>

namespace plansim::render {

namespace {

const std::array<TileRole, 21> kAllRoles = {
    TileRole::Ground,       TileRole::Hole,          TileRole::Wall,
    TileRole::GoalCell,     TileRole::Desk,          TileRole::Counter,
    TileRole::Board,        TileRole::Delivery,      TileRole::Box,
    TileRole::PackageClosed, TileRole::PackageOpen,  TileRole::PrinterOff,
    TileRole::PrinterOn,    TileRole::IngredientARaw, TileRole::IngredientAChopped,
    TileRole::IngredientBRaw, TileRole::IngredientBChopped, TileRole::Plate,
    TileRole::Salad,        TileRole::SaladPlated,   TileRole::Agent,
};

const char* kRoleNames[] = {
    "ground", "hole", "wall", "goal", "desk", "counter", "board", "delivery",
    "box", "package-closed", "package-open", "printer-off", "printer-on",
    "ingredient-a-raw", "ingredient-a-chopped", "ingredient-b-raw", "ingredient-b-chopped",
    "plate", "salad", "salad-plated", "agent",
};

const char* kGlyphNames[] = {"none",     "solid", "circle", "diamond", "cross",
                             "triangle", "ring",  "bars",   "checker"};

struct Palette {
  Rgb ground, obstacle, wall, goal, surface, agent, item_a, item_b, plate, accent;
};

// Six hand-picked palettes; the sixth doubles as the held-out appearance.
const Palette kPalettes[6] = {
    // theme-1: pale ice
    {{235, 240, 245}, {60, 110, 200}, {90, 90, 100}, {240, 190, 60}, {180, 140, 90},
     {200, 60, 60}, {90, 170, 80}, {200, 80, 80}, {230, 230, 230}, {120, 80, 160}},
    // theme-2: sand
    {{240, 228, 200}, {150, 110, 60}, {120, 100, 80}, {90, 160, 220}, {200, 170, 120},
     {60, 90, 180}, {120, 180, 60}, {220, 120, 60}, {240, 240, 240}, {60, 140, 140}},
    // theme-3: slate
    {{210, 215, 220}, {70, 80, 95}, {50, 55, 65}, {220, 120, 160}, {150, 150, 160},
     {240, 150, 40}, {100, 190, 170}, {190, 70, 110}, {235, 235, 240}, {90, 110, 200}},
    // theme-4: moss
    {{215, 230, 205}, {80, 130, 70}, {100, 110, 90}, {230, 210, 80}, {170, 160, 110},
     {150, 60, 160}, {210, 120, 70}, {90, 130, 210}, {245, 245, 235}, {170, 90, 60}},
    // theme-5: dusk
    {{225, 210, 230}, {120, 70, 140}, {85, 70, 95}, {250, 160, 90}, {180, 150, 190},
     {70, 160, 130}, {230, 180, 60}, {140, 200, 90}, {240, 235, 245}, {60, 120, 190}},
    // theme-6 (unseen): ember
    {{250, 235, 215}, {200, 90, 50}, {110, 80, 70}, {100, 200, 160}, {220, 180, 140},
     {40, 70, 150}, {160, 60, 80}, {110, 170, 50}, {250, 250, 245}, {190, 140, 50}},
};

// Glyph assignments rotate per theme so object looks change, not just colors.
Glyph rotate(std::initializer_list<Glyph> options, int theme_idx) {
  return *(options.begin() + (theme_idx % options.size()));
}

Theme make_theme(int idx) {
  const Palette& p = kPalettes[idx];
  Theme t;
  t.id = "theme-" + std::to_string(idx + 1);
  t.tile_size = 32;
  auto set = [&](TileRole role, Rgb bg, Glyph g, Rgb fg) { t.styles[role] = {bg, g, fg}; };

  set(TileRole::Ground, p.ground, Glyph::None, p.ground);
  set(TileRole::Hole, p.ground, rotate({Glyph::Circle, Glyph::Diamond, Glyph::Solid}, idx),
      p.obstacle);
  set(TileRole::Wall, p.wall, Glyph::Checker, Rgb{static_cast<std::uint8_t>(p.wall.r / 2),
                                                  static_cast<std::uint8_t>(p.wall.g / 2),
                                                  static_cast<std::uint8_t>(p.wall.b / 2)});
  set(TileRole::GoalCell, p.ground, rotate({Glyph::Diamond, Glyph::Ring, Glyph::Cross}, idx),
      p.goal);
  set(TileRole::Desk, p.surface, Glyph::Bars, p.wall);
  set(TileRole::Counter, p.surface, Glyph::Checker, p.wall);
  set(TileRole::Board, p.surface, Glyph::Bars, p.accent);
  set(TileRole::Delivery, p.surface, Glyph::Ring, p.goal);
  set(TileRole::Box, p.ground, rotate({Glyph::Solid, Glyph::Checker, Glyph::Diamond}, idx),
      p.item_a);
  set(TileRole::PackageClosed, p.ground, Glyph::Solid, p.item_b);
  set(TileRole::PackageOpen, p.ground, Glyph::Ring, p.item_b);
  set(TileRole::PrinterOff, p.ground, Glyph::Solid, p.wall);
  set(TileRole::PrinterOn, p.ground, Glyph::Cross, p.goal);
  set(TileRole::IngredientARaw, p.surface, Glyph::Circle, p.item_a);
  set(TileRole::IngredientAChopped, p.surface, Glyph::Bars, p.item_a);
  set(TileRole::IngredientBRaw, p.surface, Glyph::Circle, p.item_b);
  set(TileRole::IngredientBChopped, p.surface, Glyph::Bars, p.item_b);
  set(TileRole::Plate, p.surface, Glyph::Ring, p.plate);
  set(TileRole::Salad, p.surface, Glyph::Diamond, p.accent);
  set(TileRole::SaladPlated, p.surface, Glyph::Cross, p.accent);
  set(TileRole::Agent, p.ground, rotate({Glyph::Triangle, Glyph::Solid, Glyph::Circle}, idx),
      p.agent);
  return t;
}

Rgb rgb_from_json(const nlohmann::json& j) {
  return {j.at(0).get<std::uint8_t>(), j.at(1).get<std::uint8_t>(), j.at(2).get<std::uint8_t>()};
}

}  // namespace

const char* tile_role_name(TileRole role) { return kRoleNames[static_cast<std::size_t>(role)]; }

TileRole tile_role_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kAllRoles.size(); ++i)
    if (name == kRoleNames[i]) return kAllRoles[i];
  throw Error("unknown tile role '" + name + "'");
}

const RoleStyle& Theme::style(TileRole role) const {
  auto it = styles.find(role);
  if (it == styles.end())
    throw Error("theme '" + id + "' has no style for role '" + tile_role_name(role) + "'");
  return it->second;
}

std::string Theme::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["tile_size"] = tile_size;
  nlohmann::json styles_j;
  for (const auto& [role, style] : styles) {
    styles_j[tile_role_name(role)] = {
        {"bg", {style.background.r, style.background.g, style.background.b}},
        {"glyph", kGlyphNames[static_cast<std::size_t>(style.glyph)]},
        {"fg", {style.glyph_color.r, style.glyph_color.g, style.glyph_color.b}}};
  }
  j["styles"] = styles_j;
  return j.dump(2);
}

Theme Theme::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("theme JSON parse error: ") + e.what());
  }
  Theme t;
  t.id = j.at("id").get<std::string>();
  t.tile_size = j.at("tile_size").get<int>();
  if (t.tile_size < 16) throw Error("tile_size must be at least 16");
  for (const auto& [name, style_j] : j.at("styles").items()) {
    RoleStyle style;
    style.background = rgb_from_json(style_j.at("bg"));
    style.glyph_color = rgb_from_json(style_j.at("fg"));
    const std::string glyph = style_j.at("glyph").get<std::string>();
    bool found = false;
    for (std::size_t i = 0; i < std::size(kGlyphNames); ++i) {
      if (glyph == kGlyphNames[i]) {
        style.glyph = static_cast<Glyph>(i);
        found = true;
      }
    }
    if (!found) throw Error("unknown glyph '" + glyph + "'");
    t.styles[tile_role_from_name(name)] = style;
  }
  return t;
}

const std::vector<Theme>& builtin_themes() {
  static const std::vector<Theme>* themes = [] {
    auto* v = new std::vector<Theme>();
    for (int i = 0; i < 6; ++i) v->push_back(make_theme(i));
    return v;
  }();
  return *themes;
}

const Theme& theme_by_id(const std::string& id) {
  for (const auto& t : builtin_themes())
    if (t.id == id) return t;
  throw Error("unknown theme '" + id + "'");
}

std::vector<std::string> seen_theme_ids(int seen_count) {
  std::vector<std::string> out;
  for (int i = 1; i <= seen_count && i <= 5; ++i) out.push_back("theme-" + std::to_string(i));
  return out;
}

std::string unseen_theme_id() { return "theme-6"; }

}  // namespace plansim::render
