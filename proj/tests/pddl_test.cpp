#include <doctest.h>

#include <algorithm>

#include "plansim/pddl/ground.hpp"
#include "plansim/pddl/parser.hpp"
#include "plansim/pddl/printer.hpp"
#include "plansim/pddl/solve.hpp"
#include "plansim/pddl/validate.hpp"
#include "test_util.hpp"

using namespace plansim;
using namespace plansim::pddl;

TEST_CASE("parse frozenlake fixture domain") {
  auto parsed = parse_domain(testutil::fixture_text("frozenlake_domain.pddl"));
  REQUIRE(parsed.ok());
  const Domain& d = *parsed.value;
  CHECK(d.name == "frozenlake");
  CHECK(d.actions.size() == 4);
  CHECK(d.predicates.size() == 6);
  CHECK(d.types.empty());
  const ActionSchema* move_down = d.find_action("move-down");
  REQUIRE(move_down != nullptr);
  CHECK(move_down->params.size() == 2);
  CHECK(move_down->preconditions.size() == 3);
  // (not (ice-hole ?from)) must survive parsing with its negation
  bool has_neg_hole = false;
  for (const auto& lit : move_down->preconditions)
    if (lit.negated && lit.predicate == "ice-hole" && lit.args == std::vector<std::string>{"?from"})
      has_neg_hole = true;
  CHECK(has_neg_hole);
}

TEST_CASE("parse package fixture domain") {
  auto parsed = parse_domain(testutil::fixture_text("package_domain.pddl"));
  REQUIRE(parsed.ok());
  const Domain& d = *parsed.value;
  CHECK(d.name == "package");
  // The published ground-truth file carries the five manipulation-free
  // actions; pick-up/drop-down exist only in the simulator-backed export.
  CHECK(d.actions.size() == 5);
  CHECK(d.predicates.size() == 8);
  CHECK(d.types.size() == 3);
  CHECK(d.types == std::vector<std::string>{"position", "package", "direction"});
}

TEST_CASE("parse frozenlake fixture problem") {
  auto parsed = parse_problem(testutil::fixture_text("frozenlake_problem.pddl"));
  REQUIRE(parsed.ok());
  const Problem& p = *parsed.value;
  CHECK(p.name == "fl-rand");
  CHECK(p.domain_name == "frozenlake");
  CHECK(p.objects.size() == 16);
  REQUIRE(p.goal.size() == 1);
  CHECK(p.goal[0] == Literal{false, "at", {"pos-4-4"}});
  int holes = 0;
  for (const auto& atom : p.init) holes += atom.predicate == "ice-hole";
  CHECK(holes == 6);
}

TEST_CASE("parse trivial and empty forms") {
  auto d = parse_domain("(define (domain d) (:predicates))");
  REQUIRE(d.ok());
  CHECK(d.value->actions.empty());
  CHECK(d.value->predicates.empty());

  auto p = parse_problem("(define (problem p) (:domain d) (:objects a) (:init) (:goal (and)))");
  REQUIRE(p.ok());
  CHECK(p.value->init.empty());
  CHECK(p.value->goal.empty());
}

TEST_CASE("parse errors carry line and column") {
  auto bad = parse_domain("(define (domain d)\n  (:predicates (p ?x)\n");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.errors[0].line >= 1);

  auto unknown_req = parse_domain("(define (domain d) (:requirements :adl) (:predicates))");
  REQUIRE_FALSE(unknown_req.ok());
  CHECK(unknown_req.error_text().find("unknown requirement flag ':adl'") != std::string::npos);

  auto adl = parse_domain(
      "(define (domain d) (:predicates (p ?x)) "
      "(:action a :parameters (?x) :precondition (or (p ?x)) :effect (p ?x)))");
  REQUIRE_FALSE(adl.ok());
  CHECK(adl.error_text().find("unsupported construct 'or'") != std::string::npos);
}

TEST_CASE("validate_pair on golden fixtures is clean") {
  auto fl = validate_pair(testutil::fixture_domain("frozenlake_domain.pddl"),
                          testutil::fixture_problem("frozenlake_problem.pddl"));
  CHECK(fl.valid());
  auto pkg = validate_pair(testutil::fixture_domain("package_domain.pddl"),
                           testutil::fixture_problem("package_problem.pddl"));
  CHECK(pkg.valid());
}

TEST_CASE("validate_pair reports undeclared predicate") {
  // ice-hole used by the problem but dropped from the domain declaration
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  d.predicates.erase(std::remove_if(d.predicates.begin(), d.predicates.end(),
                                    [](const PredicateDecl& p) { return p.name == "ice-hole"; }),
                     d.predicates.end());
  auto report = validate_pair(d, testutil::fixture_problem("frozenlake_problem.pddl"));
  REQUIRE_FALSE(report.valid());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.code == "undeclared-predicate" && v.message.find("ice-hole") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("validate_pair reports arity mismatch in goal") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  p.goal[0].args.push_back("pos-1-1");
  auto report = validate_pair(d, p);
  REQUIRE_FALSE(report.valid());
  bool found = false;
  for (const auto& v : report.violations) found |= v.code == "arity-mismatch";
  CHECK(found);
}

TEST_CASE("problem referencing undeclared object is a violation naming it") {
  auto p = parse_problem(
      "(define (problem p) (:domain frozenlake) (:objects pos-1-1) "
      "(:init (at pos-9-9)) (:goal (at pos-1-1)))");
  REQUIRE(p.ok());
  auto report = validate_problem(*p.value);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations[0].code == "undeclared-object");
  CHECK(report.violations[0].message.find("pos-9-9") != std::string::npos);
}

TEST_CASE("print/parse round-trips the fixtures") {
  for (const char* name : {"frozenlake_domain.pddl", "package_domain.pddl"}) {
    Domain d = testutil::fixture_domain(name);
    auto again = parse_domain(print_domain(d));
    REQUIRE(again.ok());
    CHECK(*again.value == d);
  }
  for (const char* name : {"frozenlake_problem.pddl", "package_problem.pddl"}) {
    Problem p = testutil::fixture_problem(name);
    auto again = parse_problem(print_problem(p));
    REQUIRE(again.ok());
    CHECK(*again.value == p);
  }
}

TEST_CASE("print/parse round-trips generated ASTs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testutil::AstGen gen(seed);
    Domain d = gen.domain();
    auto d2 = parse_domain(print_domain(d));
    REQUIRE(d2.ok());
    REQUIRE(*d2.value == d);
    Problem p = gen.problem(d);
    auto p2 = parse_problem(print_problem(p));
    REQUIRE(p2.ok());
    REQUIRE(*p2.value == p);
  }
}

TEST_CASE("empty domain round-trip") {
  Domain d;
  d.name = "d";
  auto again = parse_domain(print_domain(d));
  REQUIRE(again.ok());
  CHECK(*again.value == d);
}

// ---------------------------------------------------------------------------
// Grounding and execution
// ---------------------------------------------------------------------------

namespace {

GroundAction ga(const std::string& name, std::vector<std::string> args) {
  return GroundAction{name, std::move(args)};
}

}  // namespace

TEST_CASE("applicable_actions in the frozenlake init state") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  GroundState s0 = initial_state(p);
  auto acts = applicable_actions(d, p, s0);

  // Oracle: brute-force instantiation over all object pairs.
  std::vector<GroundAction> expected;
  for (const char* schema : {"move-down", "move-left", "move-right", "move-up"}) {
    for (const auto& from : p.objects) {
      for (const auto& to : p.objects) {
        GroundAction cand = ga(schema, {from.name, to.name});
        auto next = try_apply(d, s0, cand);
        if (next) expected.push_back(cand);
      }
    }
  }
  std::sort(expected.begin(), expected.end());
  CHECK(acts == expected);

  // Agent at pos-1-1: moving right to pos-1-2 is possible, moving left is not.
  CHECK(std::find(acts.begin(), acts.end(), ga("move-right", {"pos-1-1", "pos-1-2"})) != acts.end());
  for (const auto& a : acts) CHECK(a.name != "move-left");
  CHECK(acts.size() == 2);  // right to pos-1-2 and down to pos-2-1
}

TEST_CASE("no move is applicable from an ice hole") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  GroundState s = initial_state(p);
  s.atoms.erase({"at", {"pos-1-1"}});
  s.atoms.insert({"at", {"pos-2-2"}});  // pos-2-2 is an ice hole in the fixture
  CHECK(applicable_actions(d, p, s).empty());
}

TEST_CASE("empty state yields no applicable actions") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  GroundState empty;
  CHECK(applicable_actions(d, p, empty).empty());
}

TEST_CASE("apply uses delete-then-add semantics") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  GroundState s0 = initial_state(p);
  GroundState s1 = apply(d, s0, ga("move-right", {"pos-1-1", "pos-1-2"}));
  CHECK(s1.contains({"at", {"pos-1-2"}}));
  CHECK_FALSE(s1.contains({"at", {"pos-1-1"}}));
  // Static atoms are untouched.
  CHECK(s1.contains({"ice-hole", {"pos-2-2"}}));

  // Closed-world consistency: every atom uses a declared predicate with
  // arguments drawn from the declared objects.
  std::set<std::string> objects;
  for (const auto& o : p.objects) objects.insert(o.name);
  for (const auto& atom : s1.atoms) {
    CHECK(d.find_predicate(atom.predicate) != nullptr);
    for (const auto& arg : atom.args) CHECK(objects.count(arg) == 1);
  }
}

TEST_CASE("apply errors") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  GroundState s0 = initial_state(p);
  CHECK_THROWS_AS(apply(d, s0, ga("fly", {"pos-1-1"})), Error);
  CHECK_THROWS_AS(apply(d, s0, ga("move-up", {"pos-1-1"})), Error);  // arity
  // Inapplicable: returns nullopt from try_apply, state unchanged.
  auto next = try_apply(d, s0, ga("move-left", {"pos-1-1", "pos-1-2"}));
  CHECK_FALSE(next.has_value());
  CHECK(s0 == initial_state(p));
}

TEST_CASE("apply with an empty effect leaves the state identical") {
  auto d = parse_domain(
      "(define (domain d) (:predicates (p ?x)) "
      "(:action noop :parameters (?x) :precondition (p ?x) :effect (and)))");
  REQUIRE(d.ok());
  GroundState s;
  s.atoms.insert({"p", {"a"}});
  GroundState s2 = apply(*d.value, s, ga("noop", {"a"}));
  CHECK(s2 == s);
}

// ---------------------------------------------------------------------------
// Solve and check_plan
// ---------------------------------------------------------------------------

namespace {

// Minimal hole-free 2x2 instance written out by hand.
const char* k2x2Domain = R"((define (domain frozenlake)
  (:requirements :strips)
  (:predicates (at ?x) (ice-hole ?x) (up_direction ?from ?to) (down_direction ?from ?to)
               (left_direction ?from ?to) (right_direction ?from ?to))
  (:action move-down :parameters (?from ?to)
    :precondition (and (at ?from) (down_direction ?from ?to) (not (ice-hole ?from)))
    :effect (and (at ?to) (not (at ?from))))
  (:action move-left :parameters (?from ?to)
    :precondition (and (at ?from) (left_direction ?from ?to) (not (ice-hole ?from)))
    :effect (and (at ?to) (not (at ?from))))
  (:action move-right :parameters (?from ?to)
    :precondition (and (at ?from) (right_direction ?from ?to) (not (ice-hole ?from)))
    :effect (and (at ?to) (not (at ?from))))
  (:action move-up :parameters (?from ?to)
    :precondition (and (at ?from) (up_direction ?from ?to) (not (ice-hole ?from)))
    :effect (and (at ?to) (not (at ?from)))))
)";

const char* k2x2Problem = R"((define (problem fl-2x2)
  (:domain frozenlake)
  (:objects pos-1-1 pos-1-2 pos-2-1 pos-2-2)
  (:init (at pos-1-1)
    (right_direction pos-1-1 pos-1-2) (right_direction pos-2-1 pos-2-2)
    (left_direction pos-1-2 pos-1-1) (left_direction pos-2-2 pos-2-1)
    (down_direction pos-1-1 pos-2-1) (down_direction pos-1-2 pos-2-2)
    (up_direction pos-2-1 pos-1-1) (up_direction pos-2-2 pos-1-2))
  (:goal (and (at pos-2-2))))
)";

}  // namespace

TEST_CASE("solve finds the 2-step plan on a 2x2 grid") {
  auto d = parse_domain(k2x2Domain);
  auto p = parse_problem(k2x2Problem);
  REQUIRE(d.ok());
  REQUIRE(p.ok());
  auto result = solve(*d.value, *p.value);
  REQUIRE(result.solved());
  CHECK(result.plan.steps.size() == 2);  // Manhattan distance, no obstacles
  CHECK(check_plan(*d.value, *p.value, result.plan).valid);
}

TEST_CASE("solve on the A.8 frozenlake instance matches the fixture geometry") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  auto result = solve(d, p);
  REQUIRE(result.solved());
  // Independent oracle: BFS over the 4x4 grid avoiding the six fixture holes.
  // Start (1,1), goal (4,4); shortest hole-free path has 6 moves.
  CHECK(result.plan.steps.size() == 6);
  CHECK(check_plan(d, p, result.plan).valid);
}

TEST_CASE("solve reports unsolvable when the goal is enclosed") {
  auto d = parse_domain(k2x2Domain);
  auto p = parse_problem(
      "(define (problem fl) (:domain frozenlake) (:objects pos-1-1 pos-1-2 pos-2-1 pos-2-2) "
      "(:init (at pos-1-1) (ice-hole pos-1-2) (ice-hole pos-2-1) "
      "(right_direction pos-1-1 pos-1-2) (right_direction pos-2-1 pos-2-2) "
      "(left_direction pos-1-2 pos-1-1) (left_direction pos-2-2 pos-2-1) "
      "(down_direction pos-1-1 pos-2-1) (down_direction pos-1-2 pos-2-2) "
      "(up_direction pos-2-1 pos-1-1) (up_direction pos-2-2 pos-1-2)) "
      "(:goal (and (at pos-2-2))))");
  REQUIRE(d.ok());
  REQUIRE(p.ok());
  auto result = solve(*d.value, *p.value);
  CHECK(result.status == SolveResult::Status::Unsolvable);
}

TEST_CASE("solve respects the node budget") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  auto result = solve(d, p, /*budget=*/1);
  CHECK(result.status == SolveResult::Status::BudgetExhausted);
}

TEST_CASE("empty plan is valid when the init satisfies the goal") {
  auto d = parse_domain(k2x2Domain);
  auto p = parse_problem(
      "(define (problem fl) (:domain frozenlake) (:objects pos-1-1) "
      "(:init (at pos-1-1)) (:goal (and (at pos-1-1))))");
  REQUIRE(d.ok());
  REQUIRE(p.ok());
  CHECK(check_plan(*d.value, *p.value, Plan{}).valid);
  auto result = solve(*d.value, *p.value);
  REQUIRE(result.solved());
  CHECK(result.plan.steps.empty());
}

TEST_CASE("check_plan reports the first failing index") {
  auto d = parse_domain(k2x2Domain);
  auto p = parse_problem(k2x2Problem);
  REQUIRE(d.ok());
  REQUIRE(p.ok());
  Plan plan;
  plan.steps = {ga("move-right", {"pos-1-1", "pos-1-2"}),
                ga("move-right", {"pos-1-1", "pos-1-2"}),  // now inapplicable
                ga("move-down", {"pos-1-2", "pos-2-2"})};
  auto verdict = check_plan(*d.value, *p.value, plan);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.failed_step == 1);
  CHECK(verdict.reason.find("inapplicable") != std::string::npos);
}

TEST_CASE("compiled task agrees with the public evaluator") {
  Domain d = testutil::fixture_domain("frozenlake_domain.pddl");
  Problem p = testutil::fixture_problem("frozenlake_problem.pddl");
  CompiledTask task(d, p);
  // Walk a few states and compare applicable sets through both routes.
  StateBits s = task.initial();
  GroundState pub = initial_state(p);
  for (int depth = 0; depth < 5; ++depth) {
    auto fast = task.applicable_now(s);
    std::vector<GroundAction> fast_actions;
    for (auto idx : fast) fast_actions.push_back(task.instances()[idx].to_action());
    CHECK(fast_actions == applicable_actions(d, p, pub));
    CHECK(task.to_public(s) == pub);
    if (fast.empty()) break;
    s = task.apply(s, fast[0]);
    pub = apply(d, pub, fast_actions[0]);
  }
}
