#pragma once

#include <string>

#include "plansim/pddl/ast.hpp"

namespace plansim::pddl {

/// Canonical pretty-printers. parse(print(x)) reproduces x exactly.
std::string print_domain(const Domain& domain);
std::string print_problem(const Problem& problem);

std::string print_literal(const Literal& lit);
std::string print_atom(const GroundAtom& atom);

}  // namespace plansim::pddl
