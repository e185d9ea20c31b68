#include "plansim/render/render.hpp"

#include <map>

#include "plansim/worlds/generate.hpp"

namespace plansim::render {

using worlds::Cell;
using worlds::Dir;
using worlds::GridScenario;
using worlds::Item;
using worlds::ItemKind;
using worlds::Pos;
using worlds::World;

namespace {

void draw_glyph(Image* img, int x0, int y0, int size, Glyph glyph, Rgb bg, Rgb fg) {
  const int margin = size / 8;
  const double cx = (size - 1) / 2.0, cy = (size - 1) / 2.0;
  const double r_outer = size * 0.375, r_inner = size * 0.22;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      bool on = false;
      const double dx = x - cx, dy = y - cy;
      switch (glyph) {
        case Glyph::None: break;
        case Glyph::Solid:
          on = x >= margin && x < size - margin && y >= margin && y < size - margin;
          break;
        case Glyph::Circle: on = dx * dx + dy * dy <= r_outer * r_outer; break;
        case Glyph::Diamond: on = std::abs(dx) + std::abs(dy) <= r_outer; break;
        case Glyph::Cross:
          on = (std::abs(dx) <= size / 8.0 || std::abs(dy) <= size / 8.0) && x >= margin &&
               x < size - margin && y >= margin && y < size - margin;
          break;
        case Glyph::Triangle: {
          const int rows = size - 2 * margin;
          if (y >= margin && y < size - margin) {
            const double frac = static_cast<double>(y - margin) / rows;
            on = std::abs(dx) <= frac * (size / 2.0 - margin);
          }
          break;
        }
        case Glyph::Ring: {
          const double d2 = dx * dx + dy * dy;
          on = d2 <= r_outer * r_outer && d2 >= r_inner * r_inner;
          break;
        }
        case Glyph::Bars:
          on = (y >= size / 4 - size / 12 && y <= size / 4 + size / 12) ||
               (y >= 3 * size / 4 - size / 12 && y <= 3 * size / 4 + size / 12);
          on = on && x >= margin && x < size - margin;
          break;
        case Glyph::Checker: on = ((x / (size / 4)) + (y / (size / 4))) % 2 == 0; break;
      }
      if (glyph == Glyph::None) continue;
      std::uint8_t* px = img->at(x0 + x, y0 + y);
      const Rgb& c = on ? fg : bg;
      if (on || glyph == Glyph::Checker) {
        px[0] = c.r;
        px[1] = c.g;
        px[2] = c.b;
      }
    }
  }
}

TileRole cell_role(Cell c) {
  switch (c) {
    case Cell::Ground: return TileRole::Ground;
    case Cell::Hole: return TileRole::Hole;
    case Cell::Wall: return TileRole::Wall;
    case Cell::Goal: return TileRole::GoalCell;
    case Cell::Desk: return TileRole::Desk;
    case Cell::Counter: return TileRole::Counter;
    case Cell::Board: return TileRole::Board;
    case Cell::Delivery: return TileRole::Delivery;
  }
  return TileRole::Ground;
}

TileRole item_role(const Item& item, const Theme& theme) {
  switch (item.kind) {
    case ItemKind::Box: return TileRole::Box;
    case ItemKind::Package:
      return item.open ? TileRole::PackageOpen : TileRole::PackageClosed;
    case ItemKind::Printer: return item.powered ? TileRole::PrinterOn : TileRole::PrinterOff;
    case ItemKind::Ingredient: {
      const bool is_a = item.name == worlds::overcooked_ingredients(theme.id).first;
      if (is_a) return item.chopped ? TileRole::IngredientAChopped : TileRole::IngredientARaw;
      return item.chopped ? TileRole::IngredientBChopped : TileRole::IngredientBRaw;
    }
    case ItemKind::Plate: return TileRole::Plate;
    case ItemKind::Salad: return item.plated ? TileRole::SaladPlated : TileRole::Salad;
  }
  return TileRole::Box;
}

struct TileContent {
  TileRole cell = TileRole::Ground;
  std::optional<TileRole> item;
  bool agent = false;
  Dir facing = Dir::Up;
  std::optional<TileRole> carried;

  auto key() const { return std::tuple(cell, item, agent, agent ? facing : Dir::Up, carried); }
  bool operator==(const TileContent& o) const { return key() == o.key(); }
  bool operator<(const TileContent& o) const { return key() < o.key(); }
};

void draw_tile(Image* img, int x0, int y0, const Theme& theme, const TileContent& content,
               bool orientation_world) {
  const int size = theme.tile_size;
  const RoleStyle& base = theme.style(content.cell);
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      std::uint8_t* px = img->at(x0 + x, y0 + y);
      px[0] = base.background.r;
      px[1] = base.background.g;
      px[2] = base.background.b;
    }
  draw_glyph(img, x0, y0, size, base.glyph, base.background, base.glyph_color);
  if (content.item) {
    const RoleStyle& s = theme.style(*content.item);
    if (content.agent) {
      draw_glyph(img, x0, y0, size / 2, s.glyph, s.background, s.glyph_color);  // top-left
    } else {
      draw_glyph(img, x0, y0, size, s.glyph, s.background, s.glyph_color);
    }
  }
  if (content.agent) {
    const RoleStyle& s = theme.style(TileRole::Agent);
    const int asz = (size * 5) / 8;
    const int off = (size - asz) / 2;
    draw_glyph(img, x0 + off, y0 + off, asz, s.glyph, s.background, s.glyph_color);
    if (content.carried) {
      const RoleStyle& cs = theme.style(*content.carried);
      draw_glyph(img, x0 + size / 2, y0 + size / 2, size / 2, cs.glyph, cs.background,
                 cs.glyph_color);  // bottom-right
    }
    if (orientation_world) {
      // Facing tick: a small block on the faced edge's midpoint.
      const int t = std::max(3, size / 8);
      int tx = x0 + size / 2 - t / 2, ty = y0 + size / 2 - t / 2;
      switch (content.facing) {
        case Dir::Up: ty = y0; break;
        case Dir::Down: ty = y0 + size - t; break;
        case Dir::Left: tx = x0; break;
        case Dir::Right: tx = x0 + size - t; break;
      }
      for (int y = 0; y < t; ++y)
        for (int x = 0; x < t; ++x) {
          std::uint8_t* px = img->at(tx + x, ty + y);
          px[0] = s.glyph_color.r;
          px[1] = s.glyph_color.g;
          px[2] = s.glyph_color.b;
        }
    }
  }
}

std::vector<Cell> world_cells(World w) {
  switch (w) {
    case World::FrozenLake: return {Cell::Ground, Cell::Hole, Cell::Goal};
    case World::Maze: return {Cell::Ground, Cell::Wall, Cell::Goal};
    case World::Sokoban: return {Cell::Ground, Cell::Wall, Cell::Goal};
    case World::Package: return {Cell::Ground};
    case World::Printer: return {Cell::Ground, Cell::Desk};
    case World::Overcooked: return {Cell::Ground, Cell::Counter, Cell::Board, Cell::Delivery};
  }
  return {Cell::Ground};
}

std::vector<TileRole> world_item_roles(World w) {
  switch (w) {
    case World::FrozenLake:
    case World::Maze: return {};
    case World::Sokoban: return {TileRole::Box};
    case World::Package: return {TileRole::PackageClosed, TileRole::PackageOpen};
    case World::Printer: return {TileRole::PrinterOff, TileRole::PrinterOn};
    case World::Overcooked:
      return {TileRole::IngredientARaw, TileRole::IngredientAChopped, TileRole::IngredientBRaw,
              TileRole::IngredientBChopped, TileRole::Plate, TileRole::Salad,
              TileRole::SaladPlated};
  }
  return {};
}

TileContent tile_content_at(const GridScenario& sc, Pos pos, const Theme& theme) {
  TileContent content;
  content.cell = cell_role(sc.cell(pos));
  if (auto idx = sc.item_at(pos)) content.item = item_role(sc.items[*idx], theme);
  if (sc.agent == pos) {
    content.agent = true;
    content.facing = sc.facing;
    if (auto carried = sc.carried_item())
      content.carried = item_role(sc.items[*carried], theme);
  }
  return content;
}

}  // namespace

Image render_scenario(const GridScenario& sc, const Theme& theme) {
  if (theme.tile_size < 16) throw Error("tile size must be at least 16 px");
  const int size = theme.tile_size;
  Image img = Image::filled(sc.cols * size, sc.rows * size, 0, 0, 0);
  const bool orientation = worlds::has_facing(sc.world);
  for (int r = 1; r <= sc.rows; ++r)
    for (int c = 1; c <= sc.cols; ++c)
      draw_tile(&img, (c - 1) * size, (r - 1) * size, theme, tile_content_at(sc, {r, c}, theme),
                orientation);
  return img;
}

GridScenario decode_image(const Image& image, const Theme& theme, World world) {
  const int size = theme.tile_size;
  if (image.width % size != 0 || image.height % size != 0)
    throw Error("image dimensions are not a multiple of the tile size");
  const int rows = image.height / size, cols = image.width / size;
  if (rows < 2 || cols < 2 || rows > 8 || cols > 8)
    throw Error("decoded grid size out of supported range");

  // Render every possible tile once and index it by its exact bytes.
  const bool orientation = worlds::has_facing(world);
  std::map<std::vector<std::uint8_t>, TileContent> lookup;
  auto add_candidate = [&](const TileContent& content) {
    Image tile = Image::filled(size, size, 0, 0, 0);
    draw_tile(&tile, 0, 0, theme, content, orientation);
    lookup.emplace(tile.pixels, content);
  };
  std::vector<std::optional<TileRole>> items{std::nullopt};
  for (TileRole r : world_item_roles(world)) items.push_back(r);
  std::vector<std::optional<TileRole>> carried{std::nullopt};
  if (orientation)
    for (TileRole r : world_item_roles(world)) carried.push_back(r);
  for (Cell cell : world_cells(world)) {
    for (const auto& item : items) {
      TileContent content;
      content.cell = cell_role(cell);
      content.item = item;
      add_candidate(content);
      for (Dir facing : orientation ? std::vector<Dir>{Dir::Up, Dir::Down, Dir::Left, Dir::Right}
                                    : std::vector<Dir>{Dir::Up}) {
        for (const auto& carry : carried) {
          TileContent with_agent = content;
          with_agent.agent = true;
          with_agent.facing = facing;
          with_agent.carried = carry;
          add_candidate(with_agent);
        }
      }
    }
  }

  GridScenario sc;
  sc.world = world;
  sc.rows = rows;
  sc.cols = cols;
  sc.cells.assign(static_cast<std::size_t>(rows) * cols, Cell::Ground);
  sc.theme = theme.id;
  bool agent_found = false;
  std::optional<TileRole> carried_role;
  std::vector<std::pair<Pos, TileRole>> found_items;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      std::vector<std::uint8_t> tile_bytes;
      tile_bytes.reserve(3 * static_cast<std::size_t>(size) * size);
      for (int y = 0; y < size; ++y) {
        const std::uint8_t* row = image.at((c - 1) * size, (r - 1) * size + y);
        tile_bytes.insert(tile_bytes.end(), row, row + 3 * size);
      }
      auto it = lookup.find(tile_bytes);
      if (it == lookup.end())
        throw Error("unrecognized tile at " + Pos{r, c}.name() + " for theme " + theme.id);
      const TileContent& content = it->second;
      Cell cell = Cell::Ground;
      for (Cell cand : world_cells(world))
        if (cell_role(cand) == content.cell) cell = cand;
      sc.set_cell({r, c}, cell);
      if (content.item) found_items.push_back({{r, c}, *content.item});
      if (content.agent) {
        if (agent_found) throw Error("two agents decoded");
        agent_found = true;
        sc.agent = {r, c};
        sc.facing = content.facing;
        carried_role = content.carried;
      }
    }
  }
  if (!agent_found) throw Error("no agent tile decoded");
  sc.start = sc.agent;

  auto add_item = [&](TileRole role, std::optional<Pos> pos, int index) {
    Item item;
    item.kind = ItemKind::Box;
    const auto [ing_a, ing_b] = worlds::overcooked_ingredients(theme.id);
    switch (role) {
      case TileRole::Box:
        item.kind = ItemKind::Box;
        item.name = "box-" + std::to_string(index);
        break;
      case TileRole::PackageClosed:
      case TileRole::PackageOpen:
        item.kind = ItemKind::Package;
        item.name = "pkg-" + std::to_string(index);
        item.open = role == TileRole::PackageOpen;
        break;
      case TileRole::PrinterOff:
      case TileRole::PrinterOn:
        item.kind = ItemKind::Printer;
        item.name = "printer-1";
        item.powered = role == TileRole::PrinterOn;
        break;
      case TileRole::IngredientARaw:
      case TileRole::IngredientAChopped:
        item.kind = ItemKind::Ingredient;
        item.name = ing_a;
        item.chopped = role == TileRole::IngredientAChopped;
        break;
      case TileRole::IngredientBRaw:
      case TileRole::IngredientBChopped:
        item.kind = ItemKind::Ingredient;
        item.name = ing_b;
        item.chopped = role == TileRole::IngredientBChopped;
        break;
      case TileRole::Plate:
        item.kind = ItemKind::Plate;
        item.name = "plate-1";
        break;
      case TileRole::Salad:
      case TileRole::SaladPlated:
        item.kind = ItemKind::Salad;
        item.name = "salad-1";
        item.plated = role == TileRole::SaladPlated;
        break;
      default: throw Error("tile role is not an item");
    }
    if (pos) {
      item.pos = *pos;
      item.loc = Item::Loc::OnGrid;
    } else {
      item.loc = Item::Loc::Carried;
    }
    sc.items.push_back(item);
  };

  int counter = 1;
  for (const auto& [pos, role] : found_items) add_item(role, pos, counter++);
  if (carried_role) add_item(*carried_role, std::nullopt, counter++);
  if (world == World::Overcooked) {
    bool has_salad = false;
    for (const auto& item : sc.items) has_salad |= item.kind == ItemKind::Salad;
    if (!has_salad) {
      Item salad{ItemKind::Salad, "salad-1", {}};
      salad.loc = Item::Loc::Gone;
      sc.items.push_back(salad);
    }
  }
  return sc;
}

}  // namespace plansim::render
