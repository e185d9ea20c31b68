#pragma once

#include <utility>

#include "plansim/pddl/ast.hpp"
#include "plansim/worlds/scenario.hpp"

namespace plansim::worlds {

/// Emits the reference PDDL encoding of a Base-variant scenario. The pair
/// validates and agrees step-for-step with the simulator: an action label is
/// executable in the scenario exactly when a ground instance of its schema
/// is applicable in the encoded state. History-dependent rule variants are
/// not STRIPS-expressible and are rejected.
std::pair<pddl::Domain, pddl::Problem> ground_truth_pddl(const GridScenario& sc);

/// The file template handed to generators: same types, action names and
/// parameter lists as the reference domain, with empty predicate and
/// precondition/effect bodies.
pddl::Domain domain_template(World w);

}  // namespace plansim::worlds
