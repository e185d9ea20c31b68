#pragma once

#include <memory>

#include "plansim/consistency/walk.hpp"
#include "plansim/oracle/description.hpp"
#include "plansim/oracle/trace_text.hpp"
#include "plansim/render/render.hpp"
#include "plansim/worlds/step.hpp"

namespace plansim::oracle {

/// The scenario oracle: describes one problem instance, simulates action
/// sequences over it with step-by-step reasoning, and judges goal reaching.
class ScenarioOracle {
 public:
  virtual ~ScenarioOracle() = default;

  virtual worlds::World world() const = 0;
  virtual ScenarioDescription describe() = 0;
  virtual worlds::ExecutionTrace simulate(const worlds::ActionSeq& seq) = 0;
  /// Largest k such that the first k steps all execute; the sequence is
  /// oracle-executable iff k equals its length.
  virtual int executable_prefix(const worlds::ActionSeq& seq) = 0;
  /// Exploration-walk environment over this oracle.
  virtual std::unique_ptr<consistency::WalkEnv> walk_env() = 0;
};

int executable_prefix_of(const worlds::ExecutionTrace& trace);

/// Reads the scenario symbolically and delegates to the simulator.
class GroundTruthOracle : public ScenarioOracle {
 public:
  explicit GroundTruthOracle(worlds::GridScenario scenario);

  worlds::World world() const override { return scenario_.world; }
  ScenarioDescription describe() override;
  worlds::ExecutionTrace simulate(const worlds::ActionSeq& seq) override;
  int executable_prefix(const worlds::ActionSeq& seq) override;
  std::unique_ptr<consistency::WalkEnv> walk_env() override;

  const worlds::GridScenario& scenario() const { return scenario_; }

 private:
  worlds::GridScenario scenario_;
};

/// Ground truth behind an image: classifies the rendered tiles back into a
/// scenario, then behaves like GroundTruthOracle.
GroundTruthOracle oracle_from_image(const render::Image& image, const render::Theme& theme,
                                    worlds::World world,
                                    worlds::Variant variant = worlds::Variant::Base);

}  // namespace plansim::oracle
