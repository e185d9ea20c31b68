#pragma once

#include <string>
#include <vector>

#include "plansim/pddl/ast.hpp"

namespace plansim::pddl {

struct Violation {
  std::string code;     // stable machine-readable id, e.g. "undeclared-predicate"
  std::string message;  // human-readable description
  std::string where;    // "domain" | "problem"

  bool operator==(const Violation&) const = default;
};

/// Result of semantic validation. Violations are data, not failures:
/// an invalid pair still parses and prints.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

ValidationReport validate_domain(const Domain& domain);
ValidationReport validate_problem(const Problem& problem);

/// Cross-file checks: predicates declared before use, arity and type
/// agreement, well-formed ground goal, matching domain name.
ValidationReport validate_pair(const Domain& domain, const Problem& problem);

}  // namespace plansim::pddl
