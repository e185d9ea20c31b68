#include "plansim/consistency/ew.hpp"

#include <json.hpp>

#include "plansim/util/strings.hpp"

namespace plansim::consistency {

double harmonic_score(double a, double b) {
  if (a <= 0.0 || b <= 0.0) return 0.0;
  return 2.0 / (1.0 / a + 1.0 / b);
}

namespace {

struct DirectionStats {
  double rate = 0.0;
  bool empty = true;
};

DirectionStats direction_rate(const std::vector<std::vector<int>>& by_t) {
  DirectionStats stats;
  double sum = 0.0;
  int groups = 0;
  for (const auto& group : by_t) {
    if (group.empty()) continue;
    double ones = 0;
    for (int bit : group) ones += bit;
    sum += ones / static_cast<double>(group.size());
    ++groups;
  }
  if (groups > 0) {
    stats.rate = sum / groups;
    stats.empty = false;
  }
  return stats;
}

}  // namespace

EwReport ew_score_from_bits(const std::vector<std::vector<int>>& sim_to_pddl_by_t,
                            const std::vector<std::vector<int>>& pddl_to_sim_by_t) {
  EwReport report;
  const DirectionStats ab = direction_rate(sim_to_pddl_by_t);
  const DirectionStats ba = direction_rate(pddl_to_sim_by_t);
  report.rate_sim_to_pddl = ab.rate;
  report.rate_pddl_to_sim = ba.rate;
  report.flagged_empty = ab.empty || ba.empty;
  const std::size_t t_a = sim_to_pddl_by_t.size(), t_b = pddl_to_sim_by_t.size();
  for (std::size_t t = 0; t < std::max(t_a, t_b); ++t) {
    const bool a_has = t < t_a && !sim_to_pddl_by_t[t].empty();
    const bool b_has = t < t_b && !pddl_to_sim_by_t[t].empty();
    if (a_has != b_has) report.flagged_empty = true;
  }
  report.score = report.flagged_empty && (ab.empty || ba.empty)
                     ? 0.0
                     : harmonic_score(ab.rate, ba.rate);
  return report;
}

std::string synthesize_feedback(const std::vector<Mismatch>& mismatches) {
  if (mismatches.empty()) return "";
  const Mismatch& m = mismatches.front();
  std::string walk = join(m.walk.sequence, ", ");
  const std::string& action = m.walk.sequence[static_cast<std::size_t>(m.fail_index)];
  std::string out;
  out += "The generated PDDL files disagree with the scenario simulation.\n";
  out += "Action sequence: " + walk + "\n";
  out += "First mismatch at step " + std::to_string(m.fail_index + 1) + " ('" + action + "'): ";
  if (m.walk.source == WalkSource::FromOracle) {
    out += "the scenario simulation executes this step (result: " + m.expected_result +
           " — \"" + m.expected_reasoning + "\"), but " + m.other_note + ".";
  } else {
    out += "the PDDL environment accepts this step, but the scenario simulation expects: " +
           m.expected_result + " — \"" + m.expected_reasoning + "\".";
  }
  out += "\nReview the action's preconditions and effects and the problem file's init atoms "
         "(object declarations, direction links, state predicates) involved in this step.";
  return out;
}

EwReport ew_compare(WalkEnv& sim_env, WalkEnv& pddl_env, const EwParams& params) {
  SampleSet from_sim = sample_walks(sim_env, WalkSource::FromOracle, params.t_max,
                                    params.walks_per_t, params.seed, params.retry_cap);
  SampleSet from_pddl = sample_walks(pddl_env, WalkSource::FromPddl, params.t_max,
                                     params.walks_per_t, Rng::derive_seed(params.seed, 0x9d1),
                                     params.retry_cap);

  std::vector<std::vector<int>> sim_to_pddl(params.t_max), pddl_to_sim(params.t_max);
  std::vector<Mismatch> sim_side, pddl_side;

  for (const auto& walk : from_sim.walks) {
    CrossResult r = cross_execute(walk, pddl_env);
    sim_to_pddl[static_cast<std::size_t>(walk.length - 1)].push_back(r.executable ? 1 : 0);
    if (!r.executable) {
      // The simulator executed every step when the walk was sampled; replay
      // it to recover the verdict at the step the PDDL side rejected.
      sim_env.reset();
      for (int i = 0; i < r.fail_index; ++i)
        sim_env.try_step(walk.sequence[static_cast<std::size_t>(i)]);
      StepInfo sim_view = sim_env.step_info(walk.sequence[static_cast<std::size_t>(r.fail_index)]);
      sim_side.push_back(
          {walk, r.fail_index, sim_view.result, sim_view.reasoning, r.fail_info.reasoning});
    }
  }
  for (const auto& walk : from_pddl.walks) {
    CrossResult r = cross_execute(walk, sim_env);
    pddl_to_sim[static_cast<std::size_t>(walk.length - 1)].push_back(r.executable ? 1 : 0);
    if (!r.executable) {
      pddl_side.push_back(
          {walk, r.fail_index, r.fail_info.result, r.fail_info.reasoning, "PDDL accepts it"});
    }
  }

  EwReport report = ew_score_from_bits(sim_to_pddl, pddl_to_sim);
  report.abandoned_walks = from_sim.abandoned + from_pddl.abandoned;
  report.mismatches = std::move(sim_side);
  report.mismatches.insert(report.mismatches.end(), pddl_side.begin(), pddl_side.end());
  report.feedback = synthesize_feedback(report.mismatches);
  return report;
}

std::string EwReport::to_json() const {
  nlohmann::json j;
  j["rate_sim_to_pddl"] = rate_sim_to_pddl;
  j["rate_pddl_to_sim"] = rate_pddl_to_sim;
  j["score"] = score;
  j["flagged_empty"] = flagged_empty;
  j["abandoned_walks"] = abandoned_walks;
  j["feedback"] = feedback;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : mismatches) {
    arr.push_back({{"sequence", m.walk.sequence},
                   {"source", m.walk.source == WalkSource::FromOracle ? "oracle" : "pddl"},
                   {"length", m.walk.length},
                   {"fail_index", m.fail_index},
                   {"expected_result", m.expected_result},
                   {"expected_reasoning", m.expected_reasoning},
                   {"other_note", m.other_note}});
  }
  j["mismatches"] = arr;
  return j.dump(2);
}

}  // namespace plansim::consistency
