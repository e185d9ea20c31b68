#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "plansim/pddl/ground.hpp"
#include "plansim/util/rng.hpp"
#include "plansim/worlds/step.hpp"
#include "plansim/worlds/vocabulary.hpp"

namespace plansim::consistency {

/// What one trial step would do, for feedback synthesis.
struct StepInfo {
  bool executed = false;
  std::string result;     // "Successful" | "Unsuccessful" | "Invalid" | "applicable" | ...
  std::string reasoning;  // simulator reasoning or PDDL resolution note
};

/// An environment exploration walks run in: the scenario simulator on one
/// side, a grounded PDDL pair on the other. Both sides speak action labels.
class WalkEnv {
 public:
  virtual ~WalkEnv() = default;
  virtual void reset() = 0;
  virtual const std::vector<std::string>& labels() const = 0;
  /// Executability of one label in the current state, without advancing.
  virtual bool executable(const std::string& label) = 0;
  /// Advance if executable; returns whether it did.
  virtual bool try_step(const std::string& label) = 0;
  virtual StepInfo step_info(const std::string& label) = 0;
  /// Save/restore for exhaustive tree walks.
  virtual std::size_t save() = 0;
  virtual void restore(std::size_t token) = 0;
};

/// Ground-truth side: steps the simulator directly.
class SimWalkEnv : public WalkEnv {
 public:
  explicit SimWalkEnv(worlds::GridScenario scenario);

  void reset() override;
  const std::vector<std::string>& labels() const override;
  bool executable(const std::string& label) override;
  bool try_step(const std::string& label) override;
  StepInfo step_info(const std::string& label) override;
  std::size_t save() override;
  void restore(std::size_t token) override;

  const worlds::GridScenario& current() const { return current_; }

 private:
  worlds::GridScenario initial_;
  worlds::GridScenario current_;
  std::vector<worlds::GridScenario> stack_;
};

/// PDDL side: resolves a label to its schema bindings and applies the first
/// applicable ground instance (instances are kept in sorted order, so the
/// choice is deterministic).
class PddlWalkEnv : public WalkEnv {
 public:
  PddlWalkEnv(const pddl::Domain& domain, const pddl::Problem& problem, worlds::World world);

  void reset() override;
  const std::vector<std::string>& labels() const override;
  bool executable(const std::string& label) override;
  bool try_step(const std::string& label) override;
  StepInfo step_info(const std::string& label) override;
  std::size_t save() override;
  void restore(std::size_t token) override;

  const pddl::CompiledTask& task() const { return task_; }
  const pddl::StateBits& state() const { return state_; }

 private:
  struct Candidate {
    std::size_t instance;
  };
  /// First applicable instance for the label, if any.
  std::optional<std::size_t> resolve(const std::string& label) const;

  pddl::CompiledTask task_;
  worlds::World world_;
  std::vector<std::string> labels_;
  // label -> candidate instance ids (pinned arguments already filtered)
  std::vector<std::vector<std::size_t>> candidates_;
  pddl::StateBits state_;
  std::vector<pddl::StateBits> stack_;
};

// ---------------------------------------------------------------------------
// Sampling and cross-execution
// ---------------------------------------------------------------------------

enum class WalkSource { FromOracle, FromPddl };

struct WalkSample {
  std::vector<std::string> sequence;
  WalkSource source = WalkSource::FromOracle;
  int length = 0;

  bool operator==(const WalkSample&) const = default;
};

struct SampleSet {
  std::vector<WalkSample> walks;
  /// (T, walk-index) slots that dead-ended past the retry cap.
  int abandoned = 0;
};

/// Uniform random extension: at each step pick uniformly among the labels
/// executable now; dead ends are abandoned and resampled up to `retry_cap`.
/// Deterministic under `seed`.
SampleSet sample_walks(WalkEnv& env, WalkSource source, int t_max, int walks_per_t,
                       std::uint64_t seed, int retry_cap = 50);

struct CrossResult {
  bool executable = false;
  int fail_index = -1;       // first step the other side rejects
  StepInfo fail_info;        // that side's view of the failing step
};

/// Replays a walk in the other environment.
CrossResult cross_execute(const WalkSample& walk, WalkEnv& other);

struct Divergence {
  std::vector<std::string> sequence;  // prefix ending at the diverging step
  bool sim_executable = false;
  bool pddl_executable = false;
};

/// Exhaustively compares step-level executability of every action sequence
/// up to `max_len` (small maps only). Returns every diverging sequence.
std::vector<Divergence> exhaustive_compare(WalkEnv& sim_env, WalkEnv& pddl_env, int max_len,
                                           std::size_t divergence_limit = 100);

}  // namespace plansim::consistency
