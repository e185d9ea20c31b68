#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plansim/pddl/ast.hpp"

namespace plansim::pddl {

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
};

/// Parse outcome: either a value or a non-empty diagnostic list.
template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> errors;

  bool ok() const { return value.has_value() && errors.empty(); }
  std::string error_text() const {
    std::string out;
    for (const auto& d : errors) {
      if (!out.empty()) out += "\n";
      out += d.to_string();
    }
    return out;
  }
};

/// Parses the :strips/:typing subset. Identifiers are lowercased; syntax
/// outside the subset (numeric fluents, quantifiers, disjunctions, ...)
/// is reported as an error rather than skipped.
Parsed<Domain> parse_domain(std::string_view text);
Parsed<Problem> parse_problem(std::string_view text);

}  // namespace plansim::pddl
