#include "plansim/genclient/faults.hpp"

#include <algorithm>

#include "plansim/pddl/printer.hpp"
#include "plansim/worlds/pddl_export.hpp"

namespace plansim::genclient {

using worlds::World;

namespace {

const World kAll[] = {World::FrozenLake, World::Maze,    World::Sokoban,
                      World::Package,    World::Printer, World::Overcooked};
const World kTyped[] = {World::Sokoban, World::Package, World::Printer, World::Overcooked};
const World kOriented[] = {World::Package, World::Printer, World::Overcooked};
const World kNav[] = {World::FrozenLake, World::Maze};

std::vector<World> worlds_of(const World* begin, const World* end) { return {begin, end}; }

// The predicate whose declaration gets dropped by missing-predicate-declaration.
const char* key_predicate(World w) {
  switch (w) {
    case World::FrozenLake: return "ice-hole";
    case World::Maze: return "is-goal";
    case World::Sokoban: return "clear";
    case World::Package: return "package-closed";
    case World::Printer: return "is-desk";
    case World::Overcooked: return "chopped";
  }
  return "at";
}

void unnegate_first_at_delete(pddl::Domain* domain) {
  for (auto& action : domain->actions) {
    for (auto& lit : action.effects) {
      if (lit.negated && lit.predicate == "at") {
        lit.negated = false;
        return;
      }
    }
  }
  throw Error("no (not (at ...)) effect to flip");
}

void drop_up_direction_atoms(World w, pddl::Problem* problem) {
  auto is_up_atom = [&](const pddl::GroundAtom& atom) {
    switch (w) {
      case World::FrozenLake: return atom.predicate == "up_direction";
      case World::Maze: return atom.predicate == "move-dir-up";
      default:
        return atom.predicate == "move-dir" && atom.args.size() == 3 && atom.args[2] == "up";
    }
  };
  std::erase_if(problem->init, is_up_atom);
}

void add_hand_empty_to_moves(pddl::Domain* domain) {
  bool changed = false;
  for (auto& action : domain->actions) {
    if (action.name == "move" || action.name == "move-aligned" || action.name == "move-turn") {
      action.preconditions.push_back({false, "hand-empty", {}});
      changed = true;
    }
  }
  if (!changed) throw Error("no move schema to constrain");
}

}  // namespace

const std::vector<FaultSpec>& fault_catalog() {
  static const std::vector<FaultSpec>* catalog = [] {
    auto* v = new std::vector<FaultSpec>{
        {"missing-ice-hole-precondition", FaultClass::Walk, {World::FrozenLake},
         "the (not (ice-hole ?from)) precondition is dropped from every move"},
        {"missing-predicate-declaration", FaultClass::Prescreen,
         worlds_of(std::begin(kAll), std::end(kAll)),
         "a predicate used by the files is missing from (:predicates)"},
        {"wrong-arity-init", FaultClass::Prescreen, worlds_of(std::begin(kAll), std::end(kAll)),
         "the first init atom carries one argument too many"},
        {"wrong-effect-sign", FaultClass::Walk, worlds_of(std::begin(kAll), std::end(kAll)),
         "a move effect keeps (at ...) instead of deleting it"},
        {"missing-direction-atoms", FaultClass::Walk, worlds_of(std::begin(kAll), std::end(kAll)),
         "all upward direction link atoms are missing from the problem file"},
        {"missing-object-typing", FaultClass::Prescreen,
         worlds_of(std::begin(kTyped), std::end(kTyped)),
         "objects are declared without types in a typed domain"},
        {"wrong-goal-cell", FaultClass::Replay, worlds_of(std::begin(kNav), std::end(kNav)),
         "the goal names the agent's start cell instead of the goal cell"},
        {"missing-goal-conjunct", FaultClass::Replay,
         worlds_of(std::begin(kTyped), std::end(kTyped)),
         "the last goal literal is dropped"},
        {"extra-move-precondition", FaultClass::Walk,
         worlds_of(std::begin(kOriented), std::end(kOriented)),
         "moving requires an empty hand, which the rules do not"},
        {"reversed-direction-precondition", FaultClass::Walk,
         worlds_of(std::begin(kNav), std::end(kNav)),
         "move-up checks the downward link atoms"},
    };
    return v;
  }();
  return *catalog;
}

const FaultSpec& fault_spec(const std::string& id) {
  for (const auto& spec : fault_catalog())
    if (spec.id == id) return spec;
  throw Error("unknown fault id '" + id + "'");
}

bool fault_applicable(const std::string& id, World w) {
  const auto& spec = fault_spec(id);
  return std::find(spec.applicable.begin(), spec.applicable.end(), w) != spec.applicable.end();
}

std::vector<std::string> faults_for_world(World w) {
  std::vector<std::string> out;
  for (const auto& spec : fault_catalog())
    if (fault_applicable(spec.id, w)) out.push_back(spec.id);
  return out;
}

void inject_fault(const std::string& id, World w, pddl::Domain* domain, pddl::Problem* problem) {
  if (!fault_applicable(id, w))
    throw Error("fault '" + id + "' does not apply to " + worlds::world_name(w));
  if (id == "missing-ice-hole-precondition") {
    for (auto& action : domain->actions)
      std::erase_if(action.preconditions,
                    [](const pddl::Literal& l) { return l.negated && l.predicate == "ice-hole"; });
  } else if (id == "missing-predicate-declaration") {
    const std::string victim = key_predicate(w);
    std::erase_if(domain->predicates,
                  [&](const pddl::PredicateDecl& p) { return p.name == victim; });
  } else if (id == "wrong-arity-init") {
    if (problem->init.empty()) throw Error("problem has no init atoms");
    problem->init[0].args.push_back(problem->init[0].args.empty() ? "up"
                                                                  : problem->init[0].args[0]);
  } else if (id == "wrong-effect-sign") {
    unnegate_first_at_delete(domain);
  } else if (id == "missing-direction-atoms") {
    drop_up_direction_atoms(w, problem);
  } else if (id == "missing-object-typing") {
    for (auto& obj : problem->objects) obj.type.reset();
  } else if (id == "wrong-goal-cell") {
    // Point the goal at the agent's current cell: the planner then returns
    // the empty plan, which replays to a state where the real goal is unmet.
    for (const auto& atom : problem->init) {
      if (atom.predicate == "at") {
        problem->goal = {{false, "at", atom.args}};
        return;
      }
    }
    throw Error("problem has no (at ...) init atom");
  } else if (id == "missing-goal-conjunct") {
    if (problem->goal.empty()) throw Error("problem has no goal literals");
    problem->goal.pop_back();
  } else if (id == "extra-move-precondition") {
    add_hand_empty_to_moves(domain);
  } else if (id == "reversed-direction-precondition") {
    pddl::ActionSchema* up = nullptr;
    for (auto& action : domain->actions)
      if (action.name == "move-up") up = &action;
    if (!up) throw Error("no move-up schema");
    for (auto& lit : up->preconditions) {
      if (lit.predicate == "up_direction") lit.predicate = "down_direction";
      if (lit.predicate == "move-dir-up") lit.predicate = "move-dir-down";
    }
  } else {
    throw Error("unknown fault id '" + id + "'");
  }
}

bool fault_feedback_matches(const std::string& id, const std::string& feedback) {
  auto contains = [&](const char* needle) { return feedback.find(needle) != std::string::npos; };
  const FaultSpec& spec = fault_spec(id);
  switch (spec.cls) {
    case FaultClass::Prescreen:
      if (id == "missing-predicate-declaration") return contains("undeclared predicate");
      if (id == "wrong-arity-init") return contains("arity");
      if (id == "missing-object-typing") return contains("type");
      return false;
    case FaultClass::Replay:
      return contains("scenario goal");
    case FaultClass::Walk:
      if (id == "missing-direction-atoms" || id == "extra-move-precondition")
        return contains("no ground action of schema");
      if (id == "missing-ice-hole-precondition" || id == "wrong-effect-sign")
        return contains("the PDDL environment accepts this step");
      if (id == "reversed-direction-precondition")
        return contains("no ground action of schema") ||
               contains("the PDDL environment accepts this step");
      return false;
  }
  return false;
}

FaultyGenerator::FaultyGenerator(std::string fault_id, bool repairing)
    : fault_id_(std::move(fault_id)), repairing_(repairing) {
  fault_spec(fault_id_);  // validate the id eagerly
}

GenResult FaultyGenerator::generate(const GenRequest& request) {
  check_request(request);
  if (request.scenario == nullptr)
    throw Error("scripted generators need the scenario attached to the request");
  auto [domain, problem] = worlds::ground_truth_pddl(*request.scenario);
  const World w = request.scenario->world;

  if (request.phase == Phase::Refine) {
    if (repairing_ && fault_feedback_matches(fault_id_, request.feedback)) {
      repaired_ = true;
      GenResult result = parse_gen_output(pddl::print_domain(domain),
                                          pddl::print_problem(problem));
      result.repaired = true;
      return result;
    }
    // Feedback not understood: keep the previous files and flag it.
    GenResult result = parse_gen_output(request.prior_domain, request.prior_problem);
    result.flagged = true;
    return result;
  }

  ++generate_calls_;
  // Structural defects disappear on regeneration (the resample-and-retry
  // behaviour prescreening relies on); behavioural defects persist until a
  // matching refinement fixes them.
  const bool emit_clean =
      repaired_ ||
      (generate_calls_ > 1 && fault_spec(fault_id_).cls == FaultClass::Prescreen && repairing_);
  if (!emit_clean && fault_applicable(fault_id_, w)) inject_fault(fault_id_, w, &domain, &problem);
  if (request.phase == Phase::InstantiateProblem)
    return parse_gen_output("", pddl::print_problem(problem));
  return parse_gen_output(pddl::print_domain(domain), pddl::print_problem(problem));
}

}  // namespace plansim::genclient
