#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plansim/consistency/walk.hpp"

namespace plansim::consistency {

struct EwParams {
  int t_max = 10;
  int walks_per_t = 20;  // per T, per direction
  std::uint64_t seed = 0;
  int retry_cap = 50;
};

struct Mismatch {
  WalkSample walk;
  int fail_index = -1;
  std::string expected_result;     // the source environment's verdict at that step
  std::string expected_reasoning;  // its reasoning sentence
  std::string other_note;          // how the other side disagreed
};

struct EwReport {
  double rate_sim_to_pddl = 0.0;  // oracle-sampled walks executable in PDDL
  double rate_pddl_to_sim = 0.0;  // PDDL-sampled walks executable in the oracle
  double score = 0.0;             // harmonic mean; 0 when either rate is 0
  std::vector<Mismatch> mismatches;
  std::string feedback;  // empty when consistent
  bool flagged_empty = false;
  int abandoned_walks = 0;

  std::string to_json() const;
};

/// Harmonic mean with the zero convention of the EW score.
double harmonic_score(double a, double b);

/// Aggregates per-walk executability bits grouped by walk length T into the
/// directional rates and the EW score. Empty T-groups are skipped (and the
/// report flagged); an entirely empty direction scores 0.
EwReport ew_score_from_bits(const std::vector<std::vector<int>>& sim_to_pddl_by_t,
                            const std::vector<std::vector<int>>& pddl_to_sim_by_t);

/// Full pipeline: sample walks on both sides, cross-execute, score, and
/// synthesize first-divergence feedback.
EwReport ew_compare(WalkEnv& sim_env, WalkEnv& pddl_env, const EwParams& params = {});

/// Deterministic feedback text for the first mismatch (empty when none).
std::string synthesize_feedback(const std::vector<Mismatch>& mismatches);

}  // namespace plansim::consistency
