#include "plansim/worlds/pddl_export.hpp"

namespace plansim::worlds {

using pddl::ActionSchema;
using pddl::Domain;
using pddl::GroundAtom;
using pddl::Literal;
using pddl::PredicateDecl;
using pddl::Problem;
using pddl::TypedName;

namespace {

Literal pos_lit(std::string pred, std::vector<std::string> args) {
  return {false, std::move(pred), std::move(args)};
}
Literal neg_lit(std::string pred, std::vector<std::string> args) {
  return {true, std::move(pred), std::move(args)};
}

std::vector<TypedName> params(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::vector<TypedName> out;
  for (const auto& [name, type] : list)
    out.push_back({name, type ? std::optional<std::string>(type) : std::nullopt});
  return out;
}

// Directed in-bounds adjacency, emitted per direction in row-major order of
// the source cell.
template <typename Fn>
void for_each_adjacent(const GridScenario& sc, Dir d, Fn&& fn) {
  for (int r = 1; r <= sc.rows; ++r) {
    for (int c = 1; c <= sc.cols; ++c) {
      Pos from{r, c};
      Pos to = from.moved(d);
      if (sc.in_bounds(to)) fn(from, to);
    }
  }
}

void append_objects_row_major(const GridScenario& sc, const char* type, Problem* p) {
  for (int r = 1; r <= sc.rows; ++r)
    for (int c = 1; c <= sc.cols; ++c)
      p->objects.push_back({Pos{r, c}.name(), type ? std::optional<std::string>(type)
                                                   : std::nullopt});
}

void append_turn_atoms(Problem* p) {
  p->init.push_back({"left-turn", {"up", "left"}});
  p->init.push_back({"left-turn", {"left", "down"}});
  p->init.push_back({"left-turn", {"down", "right"}});
  p->init.push_back({"left-turn", {"right", "up"}});
  p->init.push_back({"right-turn", {"up", "right"}});
  p->init.push_back({"right-turn", {"right", "down"}});
  p->init.push_back({"right-turn", {"down", "left"}});
  p->init.push_back({"right-turn", {"left", "up"}});
}

void append_direction_objects(Problem* p) {
  for (const char* d : {"up", "down", "left", "right"})
    p->objects.push_back({d, std::string("direction")});
}

// ---------------------------------------------------------------------------
// FrozenLake — matches the reference files (untyped, *_direction predicates).
// ---------------------------------------------------------------------------

Domain frozenlake_domain() {
  Domain d;
  d.name = "frozenlake";
  d.requirements = {":strips"};
  for (const char* p : {"at", "down_direction", "ice-hole", "left_direction", "right_direction",
                        "up_direction"}) {
    PredicateDecl decl;
    decl.name = p;
    if (std::string(p) == "at" || std::string(p) == "ice-hole") {
      decl.params = params({{"?x", nullptr}});
    } else {
      decl.params = params({{"?from", nullptr}, {"?to", nullptr}});
    }
    d.predicates.push_back(decl);
  }
  for (const char* dir : {"down", "left", "right", "up"}) {
    ActionSchema a;
    a.name = std::string("move-") + dir;
    a.params = params({{"?from", nullptr}, {"?to", nullptr}});
    a.preconditions = {pos_lit("at", {"?from"}),
                       pos_lit(std::string(dir) + "_direction", {"?from", "?to"}),
                       neg_lit("ice-hole", {"?from"})};
    a.effects = {pos_lit("at", {"?to"}), neg_lit("at", {"?from"})};
    d.actions.push_back(a);
  }
  return d;
}

Problem frozenlake_problem(const GridScenario& sc) {
  Problem p;
  p.name = "fl-rand";
  p.domain_name = "frozenlake";
  append_objects_row_major(sc, nullptr, &p);
  p.init.push_back({"at", {sc.agent.name()}});
  for (const Pos& hole : sc.cells_of(Cell::Hole)) p.init.push_back({"ice-hole", {hole.name()}});
  const std::pair<const char*, Dir> blocks[] = {
      {"up_direction", Dir::Up},
      {"down_direction", Dir::Down},
      {"left_direction", Dir::Left},
      {"right_direction", Dir::Right},
  };
  for (const auto& [pred, dir] : blocks)
    for_each_adjacent(sc, dir,
                      [&](Pos from, Pos to) { p.init.push_back({pred, {from.name(), to.name()}}); });
  p.goal = {pos_lit("at", {sc.find_cell(Cell::Goal)->name()})};
  return p;
}

// ---------------------------------------------------------------------------
// Maze — move-dir-* link atoms exist only between free cells.
// ---------------------------------------------------------------------------

Domain maze_domain() {
  Domain d;
  d.name = "maze";
  d.requirements = {":strips"};
  d.predicates.push_back({"at", params({{"?x", nullptr}})});
  d.predicates.push_back({"is-goal", params({{"?x", nullptr}})});
  for (const char* dir : {"down", "left", "right", "up"})
    d.predicates.push_back(
        {std::string("move-dir-") + dir, params({{"?from", nullptr}, {"?to", nullptr}})});
  for (const char* dir : {"down", "left", "right", "up"}) {
    ActionSchema a;
    a.name = std::string("move-") + dir;
    a.params = params({{"?from", nullptr}, {"?to", nullptr}});
    a.preconditions = {pos_lit("at", {"?from"}),
                       pos_lit(std::string("move-dir-") + dir, {"?from", "?to"})};
    a.effects = {neg_lit("at", {"?from"}), pos_lit("at", {"?to"})};
    d.actions.push_back(a);
  }
  return d;
}

Problem maze_problem(const GridScenario& sc) {
  Problem p;
  p.name = "maze-rand";
  p.domain_name = "maze";
  append_objects_row_major(sc, nullptr, &p);
  p.init.push_back({"at", {sc.agent.name()}});
  p.init.push_back({"is-goal", {sc.find_cell(Cell::Goal)->name()}});
  const std::pair<const char*, Dir> blocks[] = {
      {"move-dir-up", Dir::Up},
      {"move-dir-down", Dir::Down},
      {"move-dir-left", Dir::Left},
      {"move-dir-right", Dir::Right},
  };
  for (const auto& [pred, dir] : blocks) {
    for_each_adjacent(sc, dir, [&](Pos from, Pos to) {
      if (sc.cell(from) != Cell::Wall && sc.cell(to) != Cell::Wall)
        p.init.push_back({pred, {from.name(), to.name()}});
    });
  }
  p.goal = {pos_lit("at", {sc.find_cell(Cell::Goal)->name()})};
  return p;
}

// ---------------------------------------------------------------------------
// Sokoban — move / push-to-goal / push-to-nongoal with a clear() frame.
// ---------------------------------------------------------------------------

Domain sokoban_domain() {
  Domain d;
  d.name = "sokoban";
  d.requirements = {":strips", ":typing"};
  d.types = {"thing", "location", "direction"};
  d.predicates.push_back({"at", params({{"?t", "thing"}, {"?l", "location"}})});
  d.predicates.push_back({"at-goal", params({{"?t", "thing"}})});
  d.predicates.push_back({"clear", params({{"?l", "location"}})});
  d.predicates.push_back({"is-box", params({{"?t", "thing"}})});
  d.predicates.push_back({"is-goal", params({{"?l", "location"}})});
  d.predicates.push_back({"is-nongoal", params({{"?l", "location"}})});
  d.predicates.push_back({"is-player", params({{"?t", "thing"}})});
  d.predicates.push_back(
      {"move-dir", params({{"?from", "location"}, {"?to", "location"}, {"?dir", "direction"}})});

  ActionSchema move;
  move.name = "move";
  move.params = params({{"?p", "thing"}, {"?from", "location"}, {"?to", "location"},
                        {"?dir", "direction"}});
  move.preconditions = {pos_lit("is-player", {"?p"}), pos_lit("at", {"?p", "?from"}),
                        pos_lit("clear", {"?to"}), pos_lit("move-dir", {"?from", "?to", "?dir"})};
  move.effects = {neg_lit("at", {"?p", "?from"}), neg_lit("clear", {"?to"}),
                  pos_lit("at", {"?p", "?to"}), pos_lit("clear", {"?from"})};
  d.actions.push_back(move);

  for (bool to_goal : {true, false}) {
    ActionSchema push;
    push.name = to_goal ? "push-to-goal" : "push-to-nongoal";
    push.params = params({{"?p", "thing"}, {"?b", "thing"}, {"?ppos", "location"},
                          {"?bpos", "location"}, {"?to", "location"}, {"?dir", "direction"}});
    push.preconditions = {pos_lit("is-player", {"?p"}),
                          pos_lit("is-box", {"?b"}),
                          pos_lit("at", {"?p", "?ppos"}),
                          pos_lit("at", {"?b", "?bpos"}),
                          pos_lit("clear", {"?to"}),
                          pos_lit("move-dir", {"?ppos", "?bpos", "?dir"}),
                          pos_lit("move-dir", {"?bpos", "?to", "?dir"}),
                          pos_lit(to_goal ? "is-goal" : "is-nongoal", {"?to"})};
    push.effects = {neg_lit("at", {"?p", "?ppos"}), neg_lit("at", {"?b", "?bpos"}),
                    neg_lit("clear", {"?to"}),      pos_lit("at", {"?p", "?bpos"}),
                    pos_lit("at", {"?b", "?to"}),   pos_lit("clear", {"?ppos"})};
    push.effects.push_back(to_goal ? pos_lit("at-goal", {"?b"}) : neg_lit("at-goal", {"?b"}));
    d.actions.push_back(push);
  }
  return d;
}

Problem sokoban_problem(const GridScenario& sc) {
  Problem p;
  p.name = "sokoban-rand";
  p.domain_name = "sokoban";
  p.objects.push_back({"player-1", std::string("thing")});
  for (const auto& item : sc.items) p.objects.push_back({item.name, std::string("thing")});
  append_objects_row_major(sc, "location", &p);
  append_direction_objects(&p);

  p.init.push_back({"is-player", {"player-1"}});
  p.init.push_back({"at", {"player-1", sc.agent.name()}});
  for (const auto& item : sc.items) {
    p.init.push_back({"is-box", {item.name}});
    p.init.push_back({"at", {item.name, item.pos.name()}});
    if (sc.cell(item.pos) == Cell::Goal) p.init.push_back({"at-goal", {item.name}});
  }
  for (int r = 1; r <= sc.rows; ++r) {
    for (int c = 1; c <= sc.cols; ++c) {
      Pos pos{r, c};
      p.init.push_back({sc.cell(pos) == Cell::Goal ? "is-goal" : "is-nongoal", {pos.name()}});
      if (sc.cell(pos) != Cell::Wall && !(pos == sc.agent) && !sc.item_at(pos))
        p.init.push_back({"clear", {pos.name()}});
    }
  }
  const std::pair<const char*, Dir> dirs[] = {
      {"up", Dir::Up}, {"down", Dir::Down}, {"left", Dir::Left}, {"right", Dir::Right}};
  for (const auto& [name, dir] : dirs)
    for_each_adjacent(sc, dir, [&](Pos from, Pos to) {
      p.init.push_back({"move-dir", {from.name(), to.name(), name}});
    });
  for (const auto& item : sc.items) p.goal.push_back(pos_lit("at-goal", {item.name}));
  return p;
}

// ---------------------------------------------------------------------------
// Package — the reference five actions plus pick-up/drop-down, which need a
// carry slot (carrying/hand-empty) and a one-package-per-cell frame (clear).
// ---------------------------------------------------------------------------

Domain package_domain() {
  Domain d;
  d.name = "package";
  d.requirements = {":strips", ":typing"};
  d.types = {"position", "package", "direction"};
  d.predicates.push_back({"at", params({{"?pos", "position"}})});
  d.predicates.push_back({"package-at", params({{"?pkg", "package"}, {"?pos", "position"}})});
  d.predicates.push_back({"package-open", params({{"?pkg", "package"}})});
  d.predicates.push_back({"package-closed", params({{"?pkg", "package"}})});
  d.predicates.push_back({"facing", params({{"?dir", "direction"}})});
  d.predicates.push_back({"left-turn", params({{"?from", "direction"}, {"?to", "direction"}})});
  d.predicates.push_back({"right-turn", params({{"?from", "direction"}, {"?to", "direction"}})});
  d.predicates.push_back({"move-dir", params({{"?pos1", "position"}, {"?pos2", "position"},
                                              {"?dir", "direction"}})});
  d.predicates.push_back({"carrying", params({{"?pkg", "package"}})});
  d.predicates.push_back({"hand-empty", {}});
  d.predicates.push_back({"clear", params({{"?pos", "position"}})});

  for (bool left : {true, false}) {
    ActionSchema turn;
    turn.name = left ? "turn-left" : "turn-right";
    turn.params = params({{"?current-dir", "direction"}, {"?new-dir", "direction"}});
    turn.preconditions = {pos_lit("facing", {"?current-dir"}),
                          pos_lit(left ? "left-turn" : "right-turn",
                                  {"?current-dir", "?new-dir"})};
    turn.effects = {neg_lit("facing", {"?current-dir"}), pos_lit("facing", {"?new-dir"})};
    d.actions.push_back(turn);
  }

  ActionSchema move;
  move.name = "move";
  move.params = params({{"?from", "position"}, {"?to", "position"}, {"?dir", "direction"}});
  move.preconditions = {pos_lit("at", {"?from"}), pos_lit("facing", {"?dir"}),
                        pos_lit("move-dir", {"?from", "?to", "?dir"})};
  move.effects = {neg_lit("at", {"?from"}), pos_lit("at", {"?to"})};
  d.actions.push_back(move);

  for (bool opening : {true, false}) {
    ActionSchema a;
    a.name = opening ? "open" : "close";
    a.params = params({{"?pkg", "package"}, {"?pos", "position"}, {"?pkgpos", "position"},
                       {"?dir", "direction"}});
    a.preconditions = {pos_lit("at", {"?pos"}), pos_lit("package-at", {"?pkg", "?pkgpos"}),
                       pos_lit(opening ? "package-closed" : "package-open", {"?pkg"}),
                       pos_lit("facing", {"?dir"}),
                       pos_lit("move-dir", {"?pos", "?pkgpos", "?dir"})};
    a.effects = {neg_lit(opening ? "package-closed" : "package-open", {"?pkg"}),
                 pos_lit(opening ? "package-open" : "package-closed", {"?pkg"})};
    d.actions.push_back(a);
  }

  ActionSchema pick;
  pick.name = "pick-up";
  pick.params = params({{"?pkg", "package"}, {"?pos", "position"}, {"?pkgpos", "position"},
                        {"?dir", "direction"}});
  pick.preconditions = {pos_lit("at", {"?pos"}), pos_lit("package-at", {"?pkg", "?pkgpos"}),
                        pos_lit("facing", {"?dir"}),
                        pos_lit("move-dir", {"?pos", "?pkgpos", "?dir"}),
                        pos_lit("hand-empty", {})};
  pick.effects = {neg_lit("package-at", {"?pkg", "?pkgpos"}), neg_lit("hand-empty", {}),
                  pos_lit("carrying", {"?pkg"}), pos_lit("clear", {"?pkgpos"})};
  d.actions.push_back(pick);

  ActionSchema drop;
  drop.name = "drop-down";
  drop.params = params({{"?pkg", "package"}, {"?pos", "position"}, {"?to", "position"},
                        {"?dir", "direction"}});
  drop.preconditions = {pos_lit("at", {"?pos"}), pos_lit("carrying", {"?pkg"}),
                        pos_lit("facing", {"?dir"}), pos_lit("move-dir", {"?pos", "?to", "?dir"}),
                        pos_lit("clear", {"?to"})};
  drop.effects = {neg_lit("carrying", {"?pkg"}), neg_lit("clear", {"?to"}),
                  pos_lit("hand-empty", {}), pos_lit("package-at", {"?pkg", "?to"})};
  d.actions.push_back(drop);
  return d;
}

void append_move_dir_pairs(const GridScenario& sc, Problem* p) {
  // Horizontal right/left pairs row-by-row, then vertical down/up pairs, the
  // layout used by the reference problem file.
  for (int r = 1; r <= sc.rows; ++r) {
    for (int c = 1; c + 1 <= sc.cols; ++c) {
      Pos a{r, c}, b{r, c + 1};
      p->init.push_back({"move-dir", {a.name(), b.name(), "right"}});
      p->init.push_back({"move-dir", {b.name(), a.name(), "left"}});
    }
  }
  for (int r = 1; r + 1 <= sc.rows; ++r) {
    for (int c = 1; c <= sc.cols; ++c) {
      Pos a{r, c}, b{r + 1, c};
      p->init.push_back({"move-dir", {a.name(), b.name(), "down"}});
      p->init.push_back({"move-dir", {b.name(), a.name(), "up"}});
    }
  }
}

Problem package_problem(const GridScenario& sc) {
  Problem p;
  p.name = "package";
  p.domain_name = "package";
  append_objects_row_major(sc, "position", &p);
  for (const auto& item : sc.items) p.objects.push_back({item.name, std::string("package")});
  append_direction_objects(&p);

  p.init.push_back({"at", {sc.agent.name()}});
  p.init.push_back({"facing", {dir_name(sc.facing)}});
  for (const auto& item : sc.items) {
    if (item.on_grid()) p.init.push_back({"package-at", {item.name, item.pos.name()}});
    if (item.loc == Item::Loc::Carried) p.init.push_back({"carrying", {item.name}});
    p.init.push_back({item.open ? "package-open" : "package-closed", {item.name}});
  }
  append_turn_atoms(&p);
  append_move_dir_pairs(sc, &p);
  if (!sc.carried_item()) p.init.push_back({"hand-empty", {}});
  for (int r = 1; r <= sc.rows; ++r)
    for (int c = 1; c <= sc.cols; ++c)
      if (!sc.item_at({r, c})) p.init.push_back({"clear", {Pos{r, c}.name()}});
  for (const auto& item : sc.items) p.goal.push_back(pos_lit("package-open", {item.name}));
  return p;
}

// ---------------------------------------------------------------------------
// Printer — desk cells block movement; dropping on a desk records on-desk.
// ---------------------------------------------------------------------------

Domain printer_domain() {
  Domain d;
  d.name = "printer";
  d.requirements = {":strips", ":typing", ":negative-preconditions"};
  d.types = {"position", "printer", "direction"};
  d.predicates.push_back({"at", params({{"?pos", "position"}})});
  d.predicates.push_back({"printer-at", params({{"?p", "printer"}, {"?pos", "position"}})});
  d.predicates.push_back({"printer-on", params({{"?p", "printer"}})});
  d.predicates.push_back({"printer-off", params({{"?p", "printer"}})});
  d.predicates.push_back({"on-desk", params({{"?p", "printer"}})});
  d.predicates.push_back({"is-desk", params({{"?pos", "position"}})});
  d.predicates.push_back({"facing", params({{"?dir", "direction"}})});
  d.predicates.push_back({"left-turn", params({{"?from", "direction"}, {"?to", "direction"}})});
  d.predicates.push_back({"right-turn", params({{"?from", "direction"}, {"?to", "direction"}})});
  d.predicates.push_back({"move-dir", params({{"?pos1", "position"}, {"?pos2", "position"},
                                              {"?dir", "direction"}})});
  d.predicates.push_back({"carrying", params({{"?p", "printer"}})});
  d.predicates.push_back({"hand-empty", {}});

  for (bool left : {true, false}) {
    ActionSchema turn;
    turn.name = left ? "turn-left" : "turn-right";
    turn.params = params({{"?current-dir", "direction"}, {"?new-dir", "direction"}});
    turn.preconditions = {pos_lit("facing", {"?current-dir"}),
                          pos_lit(left ? "left-turn" : "right-turn",
                                  {"?current-dir", "?new-dir"})};
    turn.effects = {neg_lit("facing", {"?current-dir"}), pos_lit("facing", {"?new-dir"})};
    d.actions.push_back(turn);
  }

  ActionSchema move;
  move.name = "move";
  move.params = params({{"?from", "position"}, {"?to", "position"}, {"?dir", "direction"}});
  move.preconditions = {pos_lit("at", {"?from"}), pos_lit("facing", {"?dir"}),
                        pos_lit("move-dir", {"?from", "?to", "?dir"}),
                        neg_lit("is-desk", {"?to"})};
  move.effects = {neg_lit("at", {"?from"}), pos_lit("at", {"?to"})};
  d.actions.push_back(move);

  ActionSchema pick;
  pick.name = "pick-up";
  pick.params = params({{"?p", "printer"}, {"?pos", "position"}, {"?ppos", "position"},
                        {"?dir", "direction"}});
  pick.preconditions = {pos_lit("at", {"?pos"}), pos_lit("printer-at", {"?p", "?ppos"}),
                        pos_lit("facing", {"?dir"}),
                        pos_lit("move-dir", {"?pos", "?ppos", "?dir"}),
                        pos_lit("hand-empty", {})};
  pick.effects = {neg_lit("printer-at", {"?p", "?ppos"}), neg_lit("hand-empty", {}),
                  neg_lit("on-desk", {"?p"}), pos_lit("carrying", {"?p"})};
  d.actions.push_back(pick);

  for (bool desk : {false, true}) {
    ActionSchema drop;
    drop.name = desk ? "drop-down-desk" : "drop-down-floor";
    drop.params = params({{"?p", "printer"}, {"?pos", "position"}, {"?to", "position"},
                          {"?dir", "direction"}});
    drop.preconditions = {pos_lit("at", {"?pos"}), pos_lit("carrying", {"?p"}),
                          pos_lit("facing", {"?dir"}),
                          pos_lit("move-dir", {"?pos", "?to", "?dir"})};
    drop.preconditions.push_back(desk ? pos_lit("is-desk", {"?to"})
                                      : neg_lit("is-desk", {"?to"}));
    drop.effects = {neg_lit("carrying", {"?p"}), pos_lit("hand-empty", {}),
                    pos_lit("printer-at", {"?p", "?to"})};
    if (desk) drop.effects.push_back(pos_lit("on-desk", {"?p"}));
    d.actions.push_back(drop);
  }

  for (bool on : {true, false}) {
    ActionSchema toggle;
    toggle.name = on ? "toggle-on" : "toggle-off";
    toggle.params = params({{"?p", "printer"}, {"?pos", "position"}, {"?ppos", "position"},
                            {"?dir", "direction"}});
    toggle.preconditions = {pos_lit("at", {"?pos"}), pos_lit("printer-at", {"?p", "?ppos"}),
                            pos_lit("facing", {"?dir"}),
                            pos_lit("move-dir", {"?pos", "?ppos", "?dir"}),
                            pos_lit(on ? "printer-off" : "printer-on", {"?p"})};
    toggle.effects = {neg_lit(on ? "printer-off" : "printer-on", {"?p"}),
                      pos_lit(on ? "printer-on" : "printer-off", {"?p"})};
    d.actions.push_back(toggle);
  }
  return d;
}

Problem printer_problem(const GridScenario& sc) {
  Problem p;
  p.name = "printer-rand";
  p.domain_name = "printer";
  append_objects_row_major(sc, "position", &p);
  p.objects.push_back({"printer-1", std::string("printer")});
  append_direction_objects(&p);

  p.init.push_back({"at", {sc.agent.name()}});
  p.init.push_back({"facing", {dir_name(sc.facing)}});
  for (const auto& item : sc.items) {
    if (item.on_grid()) {
      p.init.push_back({"printer-at", {item.name, item.pos.name()}});
      if (sc.cell(item.pos) == Cell::Desk) p.init.push_back({"on-desk", {item.name}});
    }
    if (item.loc == Item::Loc::Carried) p.init.push_back({"carrying", {item.name}});
    p.init.push_back({item.powered ? "printer-on" : "printer-off", {item.name}});
  }
  for (const Pos& desk : sc.cells_of(Cell::Desk)) p.init.push_back({"is-desk", {desk.name()}});
  append_turn_atoms(&p);
  append_move_dir_pairs(sc, &p);
  if (!sc.carried_item()) p.init.push_back({"hand-empty", {}});
  p.goal = {pos_lit("on-desk", {"printer-1"}), pos_lit("printer-on", {"printer-1"})};
  return p;
}

// ---------------------------------------------------------------------------
// Overcooked — directional moves update facing; interactions target the
// faced cell. move-turn needs a static inequality table over directions.
// ---------------------------------------------------------------------------

Domain overcooked_domain() {
  Domain d;
  d.name = "overcooked";
  d.requirements = {":strips", ":typing", ":negative-preconditions"};
  d.types = {"position", "direction", "item"};
  d.predicates.push_back({"at", params({{"?pos", "position"}})});
  d.predicates.push_back({"facing", params({{"?dir", "direction"}})});
  d.predicates.push_back({"move-dir", params({{"?pos1", "position"}, {"?pos2", "position"},
                                              {"?dir", "direction"}})});
  d.predicates.push_back({"diff", params({{"?d1", "direction"}, {"?d2", "direction"}})});
  d.predicates.push_back({"is-floor", params({{"?pos", "position"}})});
  d.predicates.push_back({"is-counter", params({{"?pos", "position"}})});
  d.predicates.push_back({"is-board", params({{"?pos", "position"}})});
  d.predicates.push_back({"is-delivery", params({{"?pos", "position"}})});
  d.predicates.push_back({"is-ingredient", params({{"?i", "item"}})});
  d.predicates.push_back({"is-plate", params({{"?i", "item"}})});
  d.predicates.push_back({"is-salad", params({{"?i", "item"}})});
  d.predicates.push_back({"item-at", params({{"?i", "item"}, {"?pos", "position"}})});
  d.predicates.push_back({"carrying", params({{"?i", "item"}})});
  d.predicates.push_back({"hand-empty", {}});
  d.predicates.push_back({"chopped", params({{"?i", "item"}})});
  d.predicates.push_back({"plated", params({{"?i", "item"}})});
  d.predicates.push_back({"delivered", params({{"?i", "item"}})});
  d.predicates.push_back({"clear", params({{"?pos", "position"}})});

  ActionSchema aligned;
  aligned.name = "move-aligned";
  aligned.params = params({{"?from", "position"}, {"?to", "position"}, {"?dir", "direction"}});
  aligned.preconditions = {pos_lit("at", {"?from"}), pos_lit("facing", {"?dir"}),
                           pos_lit("move-dir", {"?from", "?to", "?dir"}),
                           pos_lit("is-floor", {"?to"})};
  aligned.effects = {neg_lit("at", {"?from"}), pos_lit("at", {"?to"})};
  d.actions.push_back(aligned);

  ActionSchema turn;
  turn.name = "move-turn";
  turn.params = params({{"?from", "position"}, {"?to", "position"}, {"?dir", "direction"},
                        {"?olddir", "direction"}});
  turn.preconditions = {pos_lit("at", {"?from"}), pos_lit("facing", {"?olddir"}),
                        pos_lit("diff", {"?olddir", "?dir"}),
                        pos_lit("move-dir", {"?from", "?to", "?dir"}),
                        pos_lit("is-floor", {"?to"})};
  turn.effects = {neg_lit("at", {"?from"}), pos_lit("at", {"?to"}),
                  neg_lit("facing", {"?olddir"}), pos_lit("facing", {"?dir"})};
  d.actions.push_back(turn);

  auto faced = [&](ActionSchema& a) {
    a.preconditions.push_back(pos_lit("at", {"?mypos"}));
    a.preconditions.push_back(pos_lit("facing", {"?dir"}));
    a.preconditions.push_back(pos_lit("move-dir", {"?mypos", "?pos", "?dir"}));
  };

  ActionSchema chop;
  chop.name = "chop";
  chop.params = params({{"?i", "item"}, {"?pos", "position"}, {"?mypos", "position"},
                        {"?dir", "direction"}});
  faced(chop);
  chop.preconditions.push_back(pos_lit("item-at", {"?i", "?pos"}));
  chop.preconditions.push_back(pos_lit("is-ingredient", {"?i"}));
  chop.preconditions.push_back(pos_lit("is-board", {"?pos"}));
  chop.preconditions.push_back(neg_lit("chopped", {"?i"}));
  chop.effects = {pos_lit("chopped", {"?i"})};
  d.actions.push_back(chop);

  ActionSchema pick;
  pick.name = "pick";
  pick.params = params({{"?i", "item"}, {"?pos", "position"}, {"?mypos", "position"},
                        {"?dir", "direction"}});
  faced(pick);
  pick.preconditions.push_back(pos_lit("item-at", {"?i", "?pos"}));
  pick.preconditions.push_back(pos_lit("hand-empty", {}));
  pick.effects = {neg_lit("item-at", {"?i", "?pos"}), neg_lit("hand-empty", {}),
                  pos_lit("carrying", {"?i"}), pos_lit("clear", {"?pos"})};
  d.actions.push_back(pick);

  ActionSchema drop;
  drop.name = "drop";
  drop.params = params({{"?i", "item"}, {"?pos", "position"}, {"?mypos", "position"},
                        {"?dir", "direction"}});
  faced(drop);
  drop.preconditions.push_back(pos_lit("carrying", {"?i"}));
  drop.preconditions.push_back(pos_lit("is-counter", {"?pos"}));
  drop.preconditions.push_back(pos_lit("clear", {"?pos"}));
  drop.effects = {neg_lit("carrying", {"?i"}), neg_lit("clear", {"?pos"}),
                  pos_lit("hand-empty", {}), pos_lit("item-at", {"?i", "?pos"})};
  d.actions.push_back(drop);

  ActionSchema merge;
  merge.name = "merge-ingredient";
  merge.params = params({{"?a", "item"}, {"?b", "item"}, {"?s", "item"}, {"?pos", "position"},
                         {"?mypos", "position"}, {"?dir", "direction"}});
  faced(merge);
  merge.preconditions.push_back(pos_lit("carrying", {"?a"}));
  merge.preconditions.push_back(pos_lit("is-ingredient", {"?a"}));
  merge.preconditions.push_back(pos_lit("chopped", {"?a"}));
  merge.preconditions.push_back(pos_lit("item-at", {"?b", "?pos"}));
  merge.preconditions.push_back(pos_lit("is-ingredient", {"?b"}));
  merge.preconditions.push_back(pos_lit("chopped", {"?b"}));
  merge.preconditions.push_back(pos_lit("is-salad", {"?s"}));
  merge.effects = {neg_lit("carrying", {"?a"}), neg_lit("item-at", {"?b", "?pos"}),
                   pos_lit("hand-empty", {}), pos_lit("item-at", {"?s", "?pos"})};
  d.actions.push_back(merge);

  ActionSchema plate;
  plate.name = "put-plate";
  plate.params = params({{"?s", "item"}, {"?p", "item"}, {"?pos", "position"},
                         {"?mypos", "position"}, {"?dir", "direction"}});
  faced(plate);
  plate.preconditions.push_back(pos_lit("carrying", {"?s"}));
  plate.preconditions.push_back(pos_lit("is-salad", {"?s"}));
  plate.preconditions.push_back(neg_lit("plated", {"?s"}));
  plate.preconditions.push_back(pos_lit("item-at", {"?p", "?pos"}));
  plate.preconditions.push_back(pos_lit("is-plate", {"?p"}));
  plate.effects = {neg_lit("item-at", {"?p", "?pos"}), neg_lit("carrying", {"?s"}),
                   pos_lit("hand-empty", {}), pos_lit("item-at", {"?s", "?pos"}),
                   pos_lit("plated", {"?s"})};
  d.actions.push_back(plate);

  ActionSchema deliver;
  deliver.name = "deliver";
  deliver.params = params({{"?s", "item"}, {"?pos", "position"}, {"?mypos", "position"},
                           {"?dir", "direction"}});
  faced(deliver);
  deliver.preconditions.push_back(pos_lit("carrying", {"?s"}));
  deliver.preconditions.push_back(pos_lit("is-salad", {"?s"}));
  deliver.preconditions.push_back(pos_lit("plated", {"?s"}));
  deliver.preconditions.push_back(pos_lit("is-delivery", {"?pos"}));
  deliver.effects = {neg_lit("carrying", {"?s"}), pos_lit("hand-empty", {}),
                     pos_lit("delivered", {"?s"})};
  d.actions.push_back(deliver);
  return d;
}

bool overcooked_counter_like(Cell c) {
  return c == Cell::Counter || c == Cell::Board || c == Cell::Delivery;
}

Problem overcooked_problem(const GridScenario& sc) {
  Problem p;
  p.name = "overcooked-rand";
  p.domain_name = "overcooked";
  append_objects_row_major(sc, "position", &p);
  append_direction_objects(&p);
  for (const auto& item : sc.items) p.objects.push_back({item.name, std::string("item")});

  p.init.push_back({"at", {sc.agent.name()}});
  p.init.push_back({"facing", {dir_name(sc.facing)}});
  for (const char* a : {"up", "down", "left", "right"})
    for (const char* b : {"up", "down", "left", "right"})
      if (std::string(a) != b) p.init.push_back({"diff", {a, b}});
  for (int r = 1; r <= sc.rows; ++r) {
    for (int c = 1; c <= sc.cols; ++c) {
      Pos pos{r, c};
      const Cell cell = sc.cell(pos);
      if (cell == Cell::Ground) p.init.push_back({"is-floor", {pos.name()}});
      if (overcooked_counter_like(cell)) p.init.push_back({"is-counter", {pos.name()}});
      if (cell == Cell::Board) p.init.push_back({"is-board", {pos.name()}});
      if (cell == Cell::Delivery) p.init.push_back({"is-delivery", {pos.name()}});
      if (overcooked_counter_like(cell) && !sc.item_at(pos))
        p.init.push_back({"clear", {pos.name()}});
    }
  }
  for (const auto& item : sc.items) {
    switch (item.kind) {
      case ItemKind::Ingredient: p.init.push_back({"is-ingredient", {item.name}}); break;
      case ItemKind::Plate: p.init.push_back({"is-plate", {item.name}}); break;
      case ItemKind::Salad: p.init.push_back({"is-salad", {item.name}}); break;
      default: break;
    }
    if (item.on_grid()) p.init.push_back({"item-at", {item.name, item.pos.name()}});
    if (item.loc == Item::Loc::Carried) p.init.push_back({"carrying", {item.name}});
    if (item.chopped) p.init.push_back({"chopped", {item.name}});
    if (item.plated) p.init.push_back({"plated", {item.name}});
    if (item.delivered) p.init.push_back({"delivered", {item.name}});
  }
  const std::pair<const char*, Dir> dirs[] = {
      {"up", Dir::Up}, {"down", Dir::Down}, {"left", Dir::Left}, {"right", Dir::Right}};
  for (const auto& [name, dir] : dirs)
    for_each_adjacent(sc, dir, [&](Pos from, Pos to) {
      p.init.push_back({"move-dir", {from.name(), to.name(), name}});
    });
  if (!sc.carried_item()) p.init.push_back({"hand-empty", {}});
  for (const auto& item : sc.items)
    if (item.kind == ItemKind::Salad) p.goal.push_back(pos_lit("delivered", {item.name}));
  return p;
}

}  // namespace

std::pair<Domain, Problem> ground_truth_pddl(const GridScenario& sc) {
  if (sc.variant != Variant::Base)
    throw Error("only Base-variant scenarios have a STRIPS ground truth (got " +
                std::string(variant_name(sc.variant)) + ")");
  switch (sc.world) {
    case World::FrozenLake: return {frozenlake_domain(), frozenlake_problem(sc)};
    case World::Maze: return {maze_domain(), maze_problem(sc)};
    case World::Sokoban: return {sokoban_domain(), sokoban_problem(sc)};
    case World::Package: return {package_domain(), package_problem(sc)};
    case World::Printer: return {printer_domain(), printer_problem(sc)};
    case World::Overcooked: return {overcooked_domain(), overcooked_problem(sc)};
  }
  throw Error("unhandled world");
}

Domain domain_template(World w) {
  Domain full;
  switch (w) {
    case World::FrozenLake: full = frozenlake_domain(); break;
    case World::Maze: full = maze_domain(); break;
    case World::Sokoban: full = sokoban_domain(); break;
    case World::Package: full = package_domain(); break;
    case World::Printer: full = printer_domain(); break;
    case World::Overcooked: full = overcooked_domain(); break;
  }
  full.predicates.clear();
  for (auto& action : full.actions) {
    action.preconditions.clear();
    action.effects.clear();
  }
  return full;
}

}  // namespace plansim::worlds
