#include "plansim/worlds/generate.hpp"

#include <algorithm>

#include "plansim/util/rng.hpp"
#include "plansim/worlds/sim_bfs.hpp"

namespace plansim::worlds {

namespace {

constexpr std::uint64_t kSolvabilityCap = 400'000;

Pos random_cell(Rng& rng, int rows, int cols) {
  return {rng.next_int(1, rows), rng.next_int(1, cols)};
}

Dir random_dir(Rng& rng) { return static_cast<Dir>(rng.next_int(0, 3)); }

GridScenario blank(World w, int size, std::uint64_t seed, const GenerateOptions& options) {
  GridScenario sc;
  sc.world = w;
  sc.rows = sc.cols = size;
  sc.cells.assign(static_cast<std::size_t>(size) * size, Cell::Ground);
  sc.variant = options.variant;
  sc.theme = options.theme;
  sc.seed = seed;
  return sc;
}

GridScenario gen_frozenlake(int size, double p, Rng& rng, std::uint64_t seed,
                            const GenerateOptions& options) {
  GridScenario sc = blank(World::FrozenLake, size, seed, options);
  sc.agent = random_cell(rng, size, size);
  Pos goal = sc.agent;
  while (goal == sc.agent) goal = random_cell(rng, size, size);
  sc.set_cell(goal, Cell::Goal);
  sc.start = sc.agent;
  const bool teleport_pair = options.variant == Variant::R3;
  const bool keep_2_2_free = options.variant == Variant::U2;
  if (teleport_pair) {
    // Exactly two holes that teleport between each other.
    int placed = 0;
    while (placed < 2) {
      Pos h = random_cell(rng, size, size);
      if (h == sc.agent || h == goal || sc.cell(h) != Cell::Ground) continue;
      sc.set_cell(h, Cell::Hole);
      ++placed;
    }
  } else {
    for (int r = 1; r <= size; ++r) {
      for (int c = 1; c <= size; ++c) {
        Pos cell{r, c};
        if (cell == sc.agent || cell == goal) continue;
        if (keep_2_2_free && cell == Pos{2, 2}) continue;
        if (rng.next_bool(p)) sc.set_cell(cell, Cell::Hole);
      }
    }
  }
  return sc;
}

GridScenario gen_maze(int size, double p, Rng& rng, std::uint64_t seed,
                      const GenerateOptions& options) {
  GridScenario sc = blank(World::Maze, size, seed, options);
  sc.agent = random_cell(rng, size, size);
  Pos goal = sc.agent;
  while (goal == sc.agent) goal = random_cell(rng, size, size);
  sc.set_cell(goal, Cell::Goal);
  sc.start = sc.agent;
  for (int r = 1; r <= size; ++r) {
    for (int c = 1; c <= size; ++c) {
      Pos cell{r, c};
      if (cell == sc.agent || cell == goal) continue;
      if (rng.next_bool(p)) sc.set_cell(cell, Cell::Wall);
    }
  }
  return sc;
}

GridScenario gen_sokoban(int size, double p, Rng& rng, std::uint64_t seed,
                         const GenerateOptions& options) {
  GridScenario sc = blank(World::Sokoban, size, seed, options);
  const int boxes = size >= 7 ? 2 : 1;
  // Keep boxes off the outer ring so they are pushable at all.
  auto inner_cell = [&] { return Pos{rng.next_int(2, size - 1), rng.next_int(2, size - 1)}; };
  std::vector<Pos> used;
  auto taken = [&](Pos pos) { return std::find(used.begin(), used.end(), pos) != used.end(); };

  for (int b = 0; b < boxes; ++b) {
    Pos box = inner_cell();
    while (taken(box)) box = inner_cell();
    used.push_back(box);
    sc.items.push_back({ItemKind::Box, "", box});
  }
  std::sort(sc.items.begin(), sc.items.end(),
            [](const Item& a, const Item& b) { return a.pos < b.pos; });
  for (std::size_t i = 0; i < sc.items.size(); ++i)
    sc.items[i].name = "box-" + std::to_string(i + 1);
  for (int g = 0; g < boxes; ++g) {
    Pos goal = random_cell(rng, size, size);
    while (taken(goal)) goal = random_cell(rng, size, size);
    used.push_back(goal);
    sc.set_cell(goal, Cell::Goal);
  }
  Pos agent = random_cell(rng, size, size);
  while (taken(agent)) agent = random_cell(rng, size, size);
  used.push_back(agent);
  sc.agent = agent;
  sc.start = agent;
  for (int r = 1; r <= size; ++r) {
    for (int c = 1; c <= size; ++c) {
      Pos cell{r, c};
      if (taken(cell)) continue;
      if (rng.next_bool(p)) sc.set_cell(cell, Cell::Wall);
    }
  }
  return sc;
}

GridScenario gen_package(int size, double p, Rng& rng, std::uint64_t seed,
                         const GenerateOptions& options) {
  GridScenario sc = blank(World::Package, size, seed, options);
  sc.agent = random_cell(rng, size, size);
  sc.start = sc.agent;
  sc.facing = random_dir(rng);
  const int count = std::clamp(1 + static_cast<int>(p * 3.0), 1, 4);
  std::vector<Pos> used{sc.agent};
  for (int i = 0; i < count; ++i) {
    Pos pos = random_cell(rng, size, size);
    while (std::find(used.begin(), used.end(), pos) != used.end())
      pos = random_cell(rng, size, size);
    used.push_back(pos);
    sc.items.push_back({ItemKind::Package, "", pos});
  }
  std::sort(sc.items.begin(), sc.items.end(),
            [](const Item& a, const Item& b) { return a.pos < b.pos; });
  for (std::size_t i = 0; i < sc.items.size(); ++i)
    sc.items[i].name = "pkg-" + std::to_string(i + 1);
  return sc;
}

GridScenario gen_printer(int size, double p, Rng& rng, std::uint64_t seed,
                         const GenerateOptions& options) {
  GridScenario sc = blank(World::Printer, size, seed, options);
  // Desk region: a small rectangle whose area scales with obstacle_prob.
  const int desk_w = std::clamp(1 + static_cast<int>(p * size), 1, size - 1);
  const int desk_h = p > 0.5 && size >= 5 ? 2 : 1;
  const int top = rng.next_int(1, size - desk_h + 1);
  const int left = rng.next_int(1, size - desk_w + 1);
  for (int r = top; r < top + desk_h; ++r)
    for (int c = left; c < left + desk_w; ++c) sc.set_cell({r, c}, Cell::Desk);

  auto ground_cell = [&] {
    Pos pos = random_cell(rng, size, size);
    while (sc.cell(pos) != Cell::Ground) pos = random_cell(rng, size, size);
    return pos;
  };
  Pos printer = ground_cell();
  sc.items.push_back({ItemKind::Printer, "printer-1", printer});
  Pos agent = ground_cell();
  while (agent == printer) agent = ground_cell();
  sc.agent = agent;
  sc.start = agent;
  sc.facing = random_dir(rng);
  return sc;
}

GridScenario gen_overcooked(int size, double p, Rng& rng, std::uint64_t seed,
                            const GenerateOptions& options) {
  // Kitchens are counter-dense with a small connected working area, so
  // plans stay short and forward search stays tractable on 8x8 maps.
  GridScenario sc = blank(World::Overcooked, size, seed, options);
  for (int r = 1; r <= size; ++r)
    for (int c = 1; c <= size; ++c) sc.set_cell({r, c}, Cell::Counter);

  const int interior = (size - 2) * (size - 2);
  const int target_floor =
      std::clamp(static_cast<int>(interior * (1.0 - p) * 0.3), 3, 6);
  Pos walker{rng.next_int(2, size - 1), rng.next_int(2, size - 1)};
  sc.set_cell(walker, Cell::Ground);
  int carved = 1;
  int guard = 0;
  while (carved < target_floor && ++guard < 400) {
    Pos next = walker.moved(random_dir(rng));
    if (next.row < 2 || next.row > size - 1 || next.col < 2 || next.col > size - 1) continue;
    walker = next;
    if (sc.cell(walker) == Cell::Counter) {
      sc.set_cell(walker, Cell::Ground);
      ++carved;
    }
  }

  // Work surfaces must be faceable: counters adjacent to the carved floor.
  std::vector<Pos> reachable;
  for (int r = 1; r <= size; ++r) {
    for (int c = 1; c <= size; ++c) {
      Pos pos{r, c};
      if (sc.cell(pos) != Cell::Counter) continue;
      for (Dir d : {Dir::Up, Dir::Down, Dir::Left, Dir::Right}) {
        Pos n = pos.moved(d);
        if (sc.in_bounds(n) && sc.cell(n) == Cell::Ground) {
          reachable.push_back(pos);
          break;
        }
      }
    }
  }
  if (reachable.size() < 5) return sc;  // degenerate carve; fails solvability and resamples
  auto take = [&] {
    Pos pos = reachable[rng.next_below(reachable.size())];
    reachable.erase(std::remove(reachable.begin(), reachable.end(), pos), reachable.end());
    return pos;
  };
  sc.set_cell(take(), Cell::Board);
  sc.set_cell(take(), Cell::Delivery);
  auto [ing_a, ing_b] = overcooked_ingredients(options.theme);
  sc.items.push_back({ItemKind::Ingredient, ing_a, take()});
  sc.items.push_back({ItemKind::Ingredient, ing_b, take()});
  sc.items.push_back({ItemKind::Plate, "plate-1", take()});
  Item salad{ItemKind::Salad, "salad-1", {}};
  salad.loc = Item::Loc::Gone;
  sc.items.push_back(salad);

  std::vector<Pos> floor = sc.cells_of(Cell::Ground);
  sc.agent = floor[rng.next_below(floor.size())];
  sc.start = sc.agent;
  sc.facing = random_dir(rng);
  return sc;
}

}  // namespace

std::pair<std::string, std::string> overcooked_ingredients(const std::string& theme) {
  if (theme == "theme-6") return {"tomato-1", "onion-1"};
  return {"lettuce-1", "tomato-1"};
}

std::pair<int, int> size_range(World w) {
  switch (w) {
    case World::FrozenLake: return {3, 8};
    case World::Maze: return {5, 8};
    case World::Sokoban: return {5, 8};
    case World::Package: return {4, 8};
    case World::Printer: return {4, 8};
    case World::Overcooked: return {5, 8};
  }
  return {3, 8};
}

GridScenario generate_map(World w, int size, double obstacle_prob, std::uint64_t seed,
                          const GenerateOptions& options) {
  const auto [lo, hi] = size_range(w);
  if (size < lo || size > hi)
    throw Error("size " + std::to_string(size) + " out of range for " + world_name(w) + " (" +
                std::to_string(lo) + "-" + std::to_string(hi) + ")");
  if (obstacle_prob < 0.0 || obstacle_prob > 1.0)
    throw Error("obstacle probability must be in [0, 1]");
  if (options.variant != Variant::Base && w != World::FrozenLake)
    throw Error("rule variants only apply to frozenlake");

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    GridScenario sc;
    switch (w) {
      case World::FrozenLake: sc = gen_frozenlake(size, obstacle_prob, rng, seed, options); break;
      case World::Maze: sc = gen_maze(size, obstacle_prob, rng, seed, options); break;
      case World::Sokoban: sc = gen_sokoban(size, obstacle_prob, rng, seed, options); break;
      case World::Package: sc = gen_package(size, obstacle_prob, rng, seed, options); break;
      case World::Printer: sc = gen_printer(size, obstacle_prob, rng, seed, options); break;
      case World::Overcooked: sc = gen_overcooked(size, obstacle_prob, rng, seed, options); break;
    }
    sc.solvable = sim_shortest_plan(sc, kSolvabilityCap).plan.has_value();
    if (sc.solvable || !options.require_solvable) return sc;
  }
  throw Error("could not generate a solvable " + std::string(world_name(w)) + " map in " +
              std::to_string(options.max_attempts) + " attempts");
}

}  // namespace plansim::worlds
