#pragma once

#include "plansim/oracle/chat_client.hpp"
#include "plansim/oracle/oracle.hpp"

namespace plansim::oracle {

/// Scenario oracle served by a remote vision/language model. The prompt is
/// the fixed transcript-input format; replies must be full transcripts.
/// Malformed replies are retried (fresh completions) and then rejected with
/// an error rather than repaired.
class RemoteOracle : public ScenarioOracle {
 public:
  RemoteOracle(ChatClient client, worlds::World world, std::string task_description,
               std::string image_reference);

  worlds::World world() const override { return world_; }
  ScenarioDescription describe() override;
  worlds::ExecutionTrace simulate(const worlds::ActionSeq& seq) override;
  int executable_prefix(const worlds::ActionSeq& seq) override;
  std::unique_ptr<consistency::WalkEnv> walk_env() override;

 private:
  std::string ask(const worlds::ActionSeq& seq) const;

  ChatClient client_;
  worlds::World world_;
  std::string task_description_;
  std::string image_reference_;
};

/// Walk environment over any oracle via executable-prefix probes.
class OracleWalkEnv : public consistency::WalkEnv {
 public:
  explicit OracleWalkEnv(ScenarioOracle& oracle);

  void reset() override;
  const std::vector<std::string>& labels() const override;
  bool executable(const std::string& label) override;
  bool try_step(const std::string& label) override;
  consistency::StepInfo step_info(const std::string& label) override;
  std::size_t save() override;
  void restore(std::size_t token) override;

 private:
  ScenarioOracle* oracle_;
  std::vector<std::string> prefix_;
  std::vector<std::size_t> stack_;
};

}  // namespace plansim::oracle
