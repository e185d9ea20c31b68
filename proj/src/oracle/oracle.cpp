#include "plansim/oracle/oracle.hpp"

namespace plansim::oracle {

int executable_prefix_of(const worlds::ExecutionTrace& trace) {
  int k = 0;
  for (const auto& step : trace.steps) {
    if (!step.executed) break;
    ++k;
  }
  return k;
}

GroundTruthOracle::GroundTruthOracle(worlds::GridScenario scenario)
    : scenario_(std::move(scenario)) {}

ScenarioDescription GroundTruthOracle::describe() { return describe_scenario(scenario_); }

worlds::ExecutionTrace GroundTruthOracle::simulate(const worlds::ActionSeq& seq) {
  return worlds::run_sequence(scenario_, seq);
}

int GroundTruthOracle::executable_prefix(const worlds::ActionSeq& seq) {
  return executable_prefix_of(simulate(seq));
}

std::unique_ptr<consistency::WalkEnv> GroundTruthOracle::walk_env() {
  return std::make_unique<consistency::SimWalkEnv>(scenario_);
}

GroundTruthOracle oracle_from_image(const render::Image& image, const render::Theme& theme,
                                    worlds::World world, worlds::Variant variant) {
  worlds::GridScenario sc = render::decode_image(image, theme, world);
  sc.variant = variant;
  return GroundTruthOracle(std::move(sc));
}

}  // namespace plansim::oracle
