#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plansim/worlds/scenario.hpp"

namespace plansim::worlds {

/// The natural-language action names a trace uses ("move left", "pick up").
const std::vector<std::string>& action_labels(World w);

/// Accepts shorthand ("left", "move-left", "MOVE LEFT") and returns the
/// canonical label; throws for names outside the world's vocabulary.
std::string normalize_label(World w, const std::string& raw);

bool is_legal_label(World w, const std::string& label);

/// How a label maps onto PDDL action schemas of the world's file template.
/// A label may map to several schemas (e.g. a blocked-vs-pushing move);
/// `pinned` fixes schema parameters by name, e.g. {"?dir", "up"}.
struct SchemaBinding {
  std::string schema;
  std::vector<std::pair<std::string, std::string>> pinned;
};

const std::vector<SchemaBinding>& label_bindings(World w, const std::string& label);

}  // namespace plansim::worlds
