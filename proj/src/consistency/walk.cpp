#include "plansim/consistency/walk.hpp"

#include <algorithm>

namespace plansim::consistency {

using worlds::StepOutcome;

// ---------------------------------------------------------------------------
// SimWalkEnv
// ---------------------------------------------------------------------------

SimWalkEnv::SimWalkEnv(worlds::GridScenario scenario)
    : initial_(std::move(scenario)), current_(initial_) {}

void SimWalkEnv::reset() {
  current_ = initial_;
  stack_.clear();
}

const std::vector<std::string>& SimWalkEnv::labels() const {
  return worlds::action_labels(initial_.world);
}

bool SimWalkEnv::executable(const std::string& label) {
  return worlds::step(current_, label).executed;
}

bool SimWalkEnv::try_step(const std::string& label) {
  auto out = worlds::step(current_, label);
  if (!out.executed) return false;
  current_ = std::move(out.next);
  return true;
}

StepInfo SimWalkEnv::step_info(const std::string& label) {
  auto out = worlds::step(current_, label);
  return {out.executed, worlds::result_name(out.result), out.reasoning};
}

std::size_t SimWalkEnv::save() {
  stack_.push_back(current_);
  return stack_.size() - 1;
}

void SimWalkEnv::restore(std::size_t token) {
  current_ = stack_[token];
  stack_.resize(token);
}

// ---------------------------------------------------------------------------
// PddlWalkEnv
// ---------------------------------------------------------------------------

PddlWalkEnv::PddlWalkEnv(const pddl::Domain& domain, const pddl::Problem& problem,
                         worlds::World world)
    : task_(domain, problem), world_(world), labels_(worlds::action_labels(world)) {
  candidates_.resize(labels_.size());
  for (std::size_t li = 0; li < labels_.size(); ++li) {
    for (const auto& binding : worlds::label_bindings(world, labels_[li])) {
      const pddl::ActionSchema* schema = domain.find_action(binding.schema);
      // Map pinned parameter names to argument positions.
      std::vector<std::pair<std::size_t, std::string>> pins;
      bool pins_ok = schema != nullptr;
      if (schema) {
        for (const auto& [param, value] : binding.pinned) {
          bool found = false;
          for (std::size_t pi = 0; pi < schema->params.size(); ++pi) {
            if (schema->params[pi].name == param) {
              pins.push_back({pi, value});
              found = true;
              break;
            }
          }
          if (!found) pins_ok = false;
        }
      }
      if (!pins_ok) continue;  // schema missing or renamed: label stays unresolvable
      for (std::size_t idx : task_.schema_instances(binding.schema)) {
        const auto& inst = task_.instances()[idx];
        bool match = true;
        for (const auto& [pos, value] : pins) {
          if (pos >= inst.args.size() || inst.args[pos] != value) {
            match = false;
            break;
          }
        }
        if (match) candidates_[li].push_back(idx);
      }
    }
  }
  state_ = task_.initial();
}

void PddlWalkEnv::reset() {
  state_ = task_.initial();
  stack_.clear();
}

const std::vector<std::string>& PddlWalkEnv::labels() const { return labels_; }

std::optional<std::size_t> PddlWalkEnv::resolve(const std::string& label) const {
  for (std::size_t li = 0; li < labels_.size(); ++li) {
    if (labels_[li] != label) continue;
    for (std::size_t idx : candidates_[li])
      if (task_.applicable(state_, idx)) return idx;
    return std::nullopt;
  }
  throw Error("action '" + label + "' is not in the " + worlds::world_name(world_) +
              " vocabulary");
}

bool PddlWalkEnv::executable(const std::string& label) { return resolve(label).has_value(); }

bool PddlWalkEnv::try_step(const std::string& label) {
  auto idx = resolve(label);
  if (!idx) return false;
  state_ = task_.apply(state_, *idx);
  return true;
}

StepInfo PddlWalkEnv::step_info(const std::string& label) {
  auto idx = resolve(label);
  if (idx) {
    return {true, "applicable",
            "ground action " + task_.instances()[*idx].to_action().to_string() +
                " is applicable in the PDDL state"};
  }
  std::string schemas;
  for (const auto& binding : worlds::label_bindings(world_, label)) {
    if (!schemas.empty()) schemas += ", ";
    schemas += "'" + binding.schema + "'";
  }
  return {false, "inapplicable",
          "no ground action of schema " + schemas + " is applicable in the PDDL state"};
}

std::size_t PddlWalkEnv::save() {
  stack_.push_back(state_);
  return stack_.size() - 1;
}

void PddlWalkEnv::restore(std::size_t token) {
  state_ = stack_[token];
  stack_.resize(token);
}

// ---------------------------------------------------------------------------
// Sampling and cross-execution
// ---------------------------------------------------------------------------

SampleSet sample_walks(WalkEnv& env, WalkSource source, int t_max, int walks_per_t,
                       std::uint64_t seed, int retry_cap) {
  SampleSet set;
  for (int t = 1; t <= t_max; ++t) {
    for (int w = 0; w < walks_per_t; ++w) {
      Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(t) * 1000003 + w));
      bool emitted = false;
      for (int attempt = 0; attempt < retry_cap && !emitted; ++attempt) {
        env.reset();
        std::vector<std::string> seq;
        seq.reserve(t);
        for (int step = 0; step < t; ++step) {
          std::vector<std::string> executable;
          for (const auto& label : env.labels())
            if (env.executable(label)) executable.push_back(label);
          if (executable.empty()) break;  // dead end, resample
          const std::string& pick = executable[rng.next_below(executable.size())];
          env.try_step(pick);
          seq.push_back(pick);
        }
        if (static_cast<int>(seq.size()) == t) {
          set.walks.push_back({std::move(seq), source, t});
          emitted = true;
        }
      }
      if (!emitted) ++set.abandoned;
    }
  }
  return set;
}

CrossResult cross_execute(const WalkSample& walk, WalkEnv& other) {
  other.reset();
  CrossResult result;
  for (std::size_t i = 0; i < walk.sequence.size(); ++i) {
    if (!other.try_step(walk.sequence[i])) {
      result.executable = false;
      result.fail_index = static_cast<int>(i);
      result.fail_info = other.step_info(walk.sequence[i]);
      return result;
    }
  }
  result.executable = true;
  return result;
}

namespace {

void compare_tree(WalkEnv& sim_env, WalkEnv& pddl_env, int remaining,
                  std::vector<std::string>* prefix, std::vector<Divergence>* out,
                  std::size_t limit) {
  if (remaining == 0 || out->size() >= limit) return;
  for (const auto& label : sim_env.labels()) {
    const bool sim_ok = sim_env.executable(label);
    const bool pddl_ok = pddl_env.executable(label);
    if (sim_ok != pddl_ok) {
      prefix->push_back(label);
      out->push_back({*prefix, sim_ok, pddl_ok});
      prefix->pop_back();
      if (out->size() >= limit) return;
      continue;
    }
    if (!sim_ok) continue;
    const std::size_t sim_token = sim_env.save();
    const std::size_t pddl_token = pddl_env.save();
    sim_env.try_step(label);
    pddl_env.try_step(label);
    prefix->push_back(label);
    compare_tree(sim_env, pddl_env, remaining - 1, prefix, out, limit);
    prefix->pop_back();
    sim_env.restore(sim_token);
    pddl_env.restore(pddl_token);
  }
}

}  // namespace

std::vector<Divergence> exhaustive_compare(WalkEnv& sim_env, WalkEnv& pddl_env, int max_len,
                                           std::size_t divergence_limit) {
  sim_env.reset();
  pddl_env.reset();
  std::vector<Divergence> out;
  std::vector<std::string> prefix;
  compare_tree(sim_env, pddl_env, max_len, &prefix, &out, divergence_limit);
  return out;
}

}  // namespace plansim::consistency
