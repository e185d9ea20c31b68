#pragma once

#include <optional>
#include <string>
#include <vector>

namespace plansim::pddl {

/// A name with an optional type annotation, as in "?from - position" or
/// "pos-1-1". Untyped entries model domains written without :typing.
struct TypedName {
  std::string name;
  std::optional<std::string> type;

  bool operator==(const TypedName&) const = default;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> params;

  bool operator==(const PredicateDecl&) const = default;
};

/// A possibly negated predicate application. Arguments are variables
/// (leading '?') inside action schemas and object names elsewhere.
struct Literal {
  bool negated = false;
  std::string predicate;
  std::vector<std::string> args;

  bool operator==(const Literal&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<Literal> preconditions;  // conjunction
  std::vector<Literal> effects;        // add literals and (not ...) deletes

  bool operator==(const ActionSchema&) const = default;
};

struct Domain {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<std::string> types;
  std::vector<PredicateDecl> predicates;
  std::vector<ActionSchema> actions;

  bool operator==(const Domain&) const = default;

  const ActionSchema* find_action(const std::string& action_name) const {
    for (const auto& a : actions)
      if (a.name == action_name) return &a;
    return nullptr;
  }
  const PredicateDecl* find_predicate(const std::string& pred_name) const {
    for (const auto& p : predicates)
      if (p.name == pred_name) return &p;
    return nullptr;
  }
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  bool operator==(const GroundAtom&) const = default;
  auto operator<=>(const GroundAtom&) const = default;
};

struct Problem {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<GroundAtom> init;
  std::vector<Literal> goal;  // conjunction of ground literals

  bool operator==(const Problem&) const = default;
};

/// One step of a plan: an action name applied to concrete objects.
struct GroundAction {
  std::string name;
  std::vector<std::string> args;

  bool operator==(const GroundAction&) const = default;
  auto operator<=>(const GroundAction&) const = default;

  std::string to_string() const {
    std::string s = "(" + name;
    for (const auto& a : args) s += " " + a;
    return s + ")";
  }
};

struct Plan {
  std::vector<GroundAction> steps;

  bool operator==(const Plan&) const = default;
};

}  // namespace plansim::pddl
