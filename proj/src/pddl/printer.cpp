#include "plansim/pddl/printer.hpp"

#include <sstream>

namespace plansim::pddl {

namespace {

// Prints "a b - t c" groups, collapsing adjacent names that share a type.
std::string print_typed_list(const std::vector<TypedName>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += " ";
    out += items[i].name;
    const auto& type = items[i].type;
    const bool group_ends = i + 1 == items.size() || items[i + 1].type != type;
    if (type && group_ends) out += " - " + *type;
  }
  return out;
}

}  // namespace

std::string print_literal(const Literal& lit) {
  std::string inner = "(" + lit.predicate;
  for (const auto& a : lit.args) inner += " " + a;
  inner += ")";
  return lit.negated ? "(not " + inner + ")" : inner;
}

std::string print_atom(const GroundAtom& atom) {
  return print_literal({false, atom.predicate, atom.args});
}

std::string print_domain(const Domain& domain) {
  std::ostringstream out;
  out << "(define (domain " << domain.name << ")\n";
  if (!domain.requirements.empty()) {
    out << "  (:requirements";
    for (const auto& r : domain.requirements) out << " " << r;
    out << ")\n";
  }
  if (!domain.types.empty()) {
    out << "  (:types";
    for (const auto& t : domain.types) out << " " << t;
    out << ")\n";
  }
  out << "  (:predicates";
  for (const auto& p : domain.predicates) {
    out << "\n    (" << p.name;
    if (!p.params.empty()) out << " " << print_typed_list(p.params);
    out << ")";
  }
  out << "\n  )\n";
  for (const auto& action : domain.actions) {
    out << "  (:action " << action.name << "\n";
    out << "    :parameters (" << print_typed_list(action.params) << ")\n";
    out << "    :precondition (and";
    for (const auto& lit : action.preconditions) out << " " << print_literal(lit);
    out << ")\n";
    out << "    :effect (and";
    for (const auto& lit : action.effects) out << " " << print_literal(lit);
    out << ")\n";
    out << "  )\n";
  }
  out << ")\n";
  return out.str();
}

std::string print_problem(const Problem& problem) {
  std::ostringstream out;
  out << "(define (problem " << problem.name << ")\n";
  out << "  (:domain " << problem.domain_name << ")\n";
  out << "  (:objects";
  if (!problem.objects.empty()) out << " " << print_typed_list(problem.objects);
  out << ")\n";
  out << "  (:init";
  for (const auto& atom : problem.init) out << "\n    " << print_atom(atom);
  out << "\n  )\n";
  out << "  (:goal (and";
  for (const auto& lit : problem.goal) out << " " << print_literal(lit);
  out << "))\n";
  out << ")\n";
  return out.str();
}

}  // namespace plansim::pddl
