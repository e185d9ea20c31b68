#include <doctest.h>

#include "plansim/consistency/ew.hpp"
#include "plansim/worlds/generate.hpp"
#include "plansim/worlds/pddl_export.hpp"
#include "test_util.hpp"

using namespace plansim;
using namespace plansim::consistency;
using namespace plansim::worlds;

namespace {

GridScenario small_frozenlake(Pos agent, Pos goal, const std::vector<Pos>& holes, int n = 3) {
  GridScenario sc;
  sc.world = World::FrozenLake;
  sc.rows = sc.cols = n;
  sc.cells.assign(static_cast<std::size_t>(n) * n, Cell::Ground);
  sc.agent = sc.start = agent;
  sc.set_cell(goal, Cell::Goal);
  for (const Pos& h : holes) sc.set_cell(h, Cell::Hole);
  return sc;
}

std::pair<SimWalkEnv, PddlWalkEnv> paired_envs(const GridScenario& sc) {
  auto [domain, problem] = ground_truth_pddl(sc);
  return {SimWalkEnv(sc), PddlWalkEnv(domain, problem, sc.world)};
}

}  // namespace

TEST_CASE("ew score closed forms") {
  CHECK(harmonic_score(1.0, 1.0) == doctest::Approx(1.0));
  CHECK(harmonic_score(1.0, 0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(harmonic_score(0.0, 1.0) == 0.0);
  CHECK(harmonic_score(1.0, 0.0) == 0.0);

  auto all_ones = std::vector<std::vector<int>>{{1, 1}, {1, 1, 1}};
  auto report = ew_score_from_bits(all_ones, all_ones);
  CHECK(report.score == doctest::Approx(1.0));
  CHECK_FALSE(report.flagged_empty);

  auto half = std::vector<std::vector<int>>{{1, 0}, {0, 1}};
  report = ew_score_from_bits(all_ones, half);
  CHECK(report.rate_sim_to_pddl == doctest::Approx(1.0));
  CHECK(report.rate_pddl_to_sim == doctest::Approx(0.5));
  CHECK(report.score == doctest::Approx(2.0 / 3.0));

  auto zeros = std::vector<std::vector<int>>{{0, 0}, {0}};
  report = ew_score_from_bits(zeros, all_ones);
  CHECK(report.score == 0.0);
}

TEST_CASE("ew score is symmetric in its directions") {
  testutil::AstGen unused(0);
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<int>> a(3), b(3);
    for (int t = 0; t < 3; ++t) {
      for (int i = 0; i < 8; ++i) {
        a[t].push_back(rng.next_bool(0.7) ? 1 : 0);
        b[t].push_back(rng.next_bool(0.7) ? 1 : 0);
      }
    }
    CHECK(ew_score_from_bits(a, b).score == doctest::Approx(ew_score_from_bits(b, a).score));
  }
}

TEST_CASE("adding a mismatching walk never increases the score") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<int>> a(3), b(3);
    for (int t = 0; t < 3; ++t)
      for (int i = 0; i < 6; ++i) {
        a[t].push_back(rng.next_bool(0.8) ? 1 : 0);
        b[t].push_back(rng.next_bool(0.8) ? 1 : 0);
      }
    const double before = ew_score_from_bits(a, b).score;
    auto a2 = a;
    a2[static_cast<std::size_t>(rng.next_int(0, 2))].push_back(0);
    CHECK(ew_score_from_bits(a2, b).score <= before + 1e-12);
  }
}

TEST_CASE("walk sampling is deterministic and draws only legal first moves") {
  // 2x2 lake, agent in the top-left corner: the only executable first moves
  // are down and right.
  GridScenario sc = small_frozenlake({1, 1}, {2, 2}, {}, 2);
  SimWalkEnv env(sc);
  auto set = sample_walks(env, WalkSource::FromOracle, 1, 40, 123);
  CHECK(set.walks.size() == 40);
  for (const auto& walk : set.walks) {
    REQUIRE(walk.sequence.size() == 1);
    const std::string& first = walk.sequence[0];
    CHECK((first == "move down" || first == "move right"));
  }
  auto again = sample_walks(env, WalkSource::FromOracle, 1, 40, 123);
  CHECK(set.walks == again.walks);
  auto different = sample_walks(env, WalkSource::FromOracle, 1, 40, 124);
  CHECK(set.walks != different.walks);
}

TEST_CASE("an environment with no executable root actions yields a flagged empty report") {
  // Maze agent walled in on all sides.
  GridScenario sc;
  sc.world = World::Maze;
  sc.rows = sc.cols = 3;
  sc.cells.assign(9, Cell::Wall);
  sc.set_cell({2, 2}, Cell::Ground);
  sc.set_cell({1, 1}, Cell::Goal);
  sc.agent = sc.start = {2, 2};
  auto [sim, pddl_env] = paired_envs(sc);
  auto report = ew_compare(sim, pddl_env, {.t_max = 3, .walks_per_t = 5, .seed = 1});
  CHECK(report.flagged_empty);
  CHECK(report.score == 0.0);
  CHECK(report.abandoned_walks > 0);
}

TEST_CASE("golden pairs score exactly 1.0 in every world") {
  for (World w : {World::FrozenLake, World::Maze, World::Sokoban, World::Package, World::Printer,
                  World::Overcooked}) {
    auto sc = generate_map(w, size_range(w).first, 0.2, 31);
    auto [sim, pddl_env] = paired_envs(sc);
    auto report = ew_compare(sim, pddl_env, {.t_max = 10, .walks_per_t = 20, .seed = 5});
    INFO(world_name(w), " feedback: ", report.feedback);
    CHECK(report.score == 1.0);
    CHECK(report.mismatches.empty());
    CHECK(report.feedback.empty());
  }
}

TEST_CASE("exhaustive small-map equivalence: simulator vs exported PDDL") {
  // A 3x3 lake with a hole, all sequences up to length 6.
  GridScenario sc = small_frozenlake({1, 1}, {3, 3}, {{2, 2}});
  auto [sim, pddl_env] = paired_envs(sc);
  auto divergences = exhaustive_compare(sim, pddl_env, 6);
  CHECK(divergences.empty());

  // Same for a maze with walls.
  GridScenario maze;
  maze.world = World::Maze;
  maze.rows = maze.cols = 3;
  maze.cells.assign(9, Cell::Ground);
  maze.set_cell({2, 2}, Cell::Wall);
  maze.set_cell({3, 3}, Cell::Goal);
  maze.agent = maze.start = {1, 1};
  auto [msim, mpddl] = paired_envs(maze);
  CHECK(exhaustive_compare(msim, mpddl, 6).empty());

  // And for one small instance of each remaining world, shallower.
  for (World w : {World::Sokoban, World::Package, World::Printer, World::Overcooked}) {
    auto wsc = generate_map(w, size_range(w).first, 0.2, 77);
    auto [wsim, wpddl] = paired_envs(wsc);
    auto div = exhaustive_compare(wsim, wpddl, 4);
    INFO(world_name(w));
    CHECK(div.empty());
  }
}

TEST_CASE("a missing ice-hole precondition is detected with actionable feedback") {
  GridScenario sc = small_frozenlake({1, 1}, {3, 3}, {{2, 2}, {1, 3}}, 3);
  auto [domain, problem] = ground_truth_pddl(sc);
  // Strip "(not (ice-hole ?from))" from every move schema.
  for (auto& action : domain.actions) {
    std::erase_if(action.preconditions,
                  [](const pddl::Literal& l) { return l.negated && l.predicate == "ice-hole"; });
  }
  SimWalkEnv sim(sc);
  PddlWalkEnv pddl_env(domain, problem, sc.world);
  auto report = ew_compare(sim, pddl_env, {.t_max = 10, .walks_per_t = 20, .seed = 3});
  CHECK(report.score < 1.0);
  REQUIRE_FALSE(report.mismatches.empty());
  CHECK_FALSE(report.feedback.empty());
  // The feedback names the first mismatching action and the expected outcome.
  const auto& m = report.mismatches.front();
  CHECK(report.feedback.find(m.walk.sequence[static_cast<std::size_t>(m.fail_index)]) !=
        std::string::npos);
  CHECK(report.feedback.find(m.expected_result) != std::string::npos);
}

TEST_CASE("an extra precondition is detected from the oracle side") {
  GridScenario sc = small_frozenlake({1, 1}, {3, 3}, {{2, 2}}, 3);
  auto [domain, problem] = ground_truth_pddl(sc);
  // Forbid entering holes entirely: PDDL now rejects a legal (if fatal) move.
  for (auto& action : domain.actions)
    action.preconditions.push_back({true, "ice-hole", {"?to"}});
  SimWalkEnv sim(sc);
  PddlWalkEnv pddl_env(domain, problem, sc.world);
  auto report = ew_compare(sim, pddl_env, {.t_max = 10, .walks_per_t = 20, .seed = 3});
  CHECK(report.score < 1.0);
  REQUIRE_FALSE(report.mismatches.empty());
  bool oracle_side = false;
  for (const auto& m : report.mismatches)
    if (m.walk.source == WalkSource::FromOracle) oracle_side = true;
  CHECK(oracle_side);
  CHECK(report.feedback.find("Unsuccessful") != std::string::npos);
}

TEST_CASE("ew report serializes to json") {
  GridScenario sc = small_frozenlake({1, 1}, {2, 2}, {}, 2);
  auto [sim, pddl_env] = paired_envs(sc);
  auto report = ew_compare(sim, pddl_env, {.t_max = 2, .walks_per_t = 3, .seed = 9});
  auto j = report.to_json();
  CHECK(j.find("\"score\"") != std::string::npos);
  CHECK(j.find("\"rate_sim_to_pddl\"") != std::string::npos);
}
