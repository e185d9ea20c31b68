#include "plansim/worlds/vocabulary.hpp"

#include <map>
#include <unordered_map>

#include "plansim/util/strings.hpp"

namespace plansim::worlds {

namespace {

const std::vector<std::string> kMoveLabels = {"move up", "move down", "move left", "move right"};
const std::vector<std::string> kPackageLabels = {"turn left", "turn right", "move",
                                                 "pick up",   "drop down",  "open", "close"};
const std::vector<std::string> kPrinterLabels = {"turn left", "turn right", "move",     "pick up",
                                                 "drop down", "toggle on",  "toggle off"};
const std::vector<std::string> kOvercookedLabels = {
    "move up", "move down", "move left", "move right",      "chop",
    "pick",    "drop",      "merge ingredient", "put plate", "deliver"};

using BindingTable = std::map<std::string, std::vector<SchemaBinding>>;

BindingTable make_bindings(World w) {
  BindingTable t;
  switch (w) {
    case World::FrozenLake:
    case World::Maze:
      t["move up"] = {{"move-up", {}}};
      t["move down"] = {{"move-down", {}}};
      t["move left"] = {{"move-left", {}}};
      t["move right"] = {{"move-right", {}}};
      break;
    case World::Sokoban:
      for (const char* d : {"up", "down", "left", "right"}) {
        t[std::string("move ") + d] = {
            {"move", {{"?dir", d}}},
            {"push-to-goal", {{"?dir", d}}},
            {"push-to-nongoal", {{"?dir", d}}},
        };
      }
      break;
    case World::Package:
      t["turn left"] = {{"turn-left", {}}};
      t["turn right"] = {{"turn-right", {}}};
      t["move"] = {{"move", {}}};
      t["pick up"] = {{"pick-up", {}}};
      t["drop down"] = {{"drop-down", {}}};
      t["open"] = {{"open", {}}};
      t["close"] = {{"close", {}}};
      break;
    case World::Printer:
      t["turn left"] = {{"turn-left", {}}};
      t["turn right"] = {{"turn-right", {}}};
      t["move"] = {{"move", {}}};
      t["pick up"] = {{"pick-up", {}}};
      t["drop down"] = {{"drop-down-floor", {}}, {"drop-down-desk", {}}};
      t["toggle on"] = {{"toggle-on", {}}};
      t["toggle off"] = {{"toggle-off", {}}};
      break;
    case World::Overcooked:
      for (const char* d : {"up", "down", "left", "right"}) {
        t[std::string("move ") + d] = {
            {"move-aligned", {{"?dir", d}}},
            {"move-turn", {{"?dir", d}}},
        };
      }
      t["chop"] = {{"chop", {}}};
      t["pick"] = {{"pick", {}}};
      t["drop"] = {{"drop", {}}};
      t["merge ingredient"] = {{"merge-ingredient", {}}};
      t["put plate"] = {{"put-plate", {}}};
      t["deliver"] = {{"deliver", {}}};
      break;
  }
  return t;
}

const BindingTable& bindings(World w) {
  static const std::unordered_map<World, BindingTable>* tables = [] {
    auto* m = new std::unordered_map<World, BindingTable>();
    for (World w : {World::FrozenLake, World::Maze, World::Sokoban, World::Package, World::Printer,
                    World::Overcooked})
      (*m)[w] = make_bindings(w);
    return m;
  }();
  return tables->at(w);
}

}  // namespace

const std::vector<std::string>& action_labels(World w) {
  switch (w) {
    case World::FrozenLake:
    case World::Maze:
    case World::Sokoban: return kMoveLabels;
    case World::Package: return kPackageLabels;
    case World::Printer: return kPrinterLabels;
    case World::Overcooked: return kOvercookedLabels;
  }
  return kMoveLabels;
}

std::string normalize_label(World w, const std::string& raw) {
  std::string s = to_lower(trim(raw));
  for (char& c : s)
    if (c == '-' || c == '_') c = ' ';
  // Bare directions are a common shorthand for movement worlds.
  if (s == "up" || s == "down" || s == "left" || s == "right") {
    if (w != World::Package && w != World::Printer) s = "move " + s;
  }
  for (const auto& label : action_labels(w))
    if (s == label) return label;
  throw Error("action '" + raw + "' is not in the " + world_name(w) + " vocabulary");
}

bool is_legal_label(World w, const std::string& label) {
  for (const auto& l : action_labels(w))
    if (l == label) return true;
  return false;
}

const std::vector<SchemaBinding>& label_bindings(World w, const std::string& label) {
  const auto& table = bindings(w);
  auto it = table.find(label);
  if (it == table.end())
    throw Error("action '" + label + "' is not in the " + world_name(w) + " vocabulary");
  return it->second;
}

}  // namespace plansim::worlds
