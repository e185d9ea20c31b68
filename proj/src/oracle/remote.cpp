#include "plansim/oracle/remote.hpp"

#include "plansim/worlds/vocabulary.hpp"

namespace plansim::oracle {

RemoteOracle::RemoteOracle(ChatClient client, worlds::World world, std::string task_description,
                           std::string image_reference)
    : client_(std::move(client)),
      world_(world),
      task_description_(std::move(task_description)),
      image_reference_(std::move(image_reference)) {}

std::string RemoteOracle::ask(const worlds::ActionSeq& seq) const {
  std::string prompt = render_prompt(task_description_, seq.actions);
  if (!image_reference_.empty())
    prompt += "\nImage observation reference: " + image_reference_ + "\n";
  return client_.complete({{"user", prompt}});
}

worlds::ExecutionTrace RemoteOracle::simulate(const worlds::ActionSeq& seq) {
  std::string last_error;
  for (int attempt = 0; attempt <= client_.config().max_retries; ++attempt) {
    const std::string reply = ask(seq);
    try {
      return trace_from_sections(parse_transcript(reply), seq.actions);
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  throw TransportError("remote oracle returned malformed transcripts: " + last_error);
}

ScenarioDescription RemoteOracle::describe() {
  // The model's output format always carries the description block; probe it
  // with a minimal one-action sequence.
  worlds::ActionSeq probe{{worlds::action_labels(world_).front()}};
  std::string last_error;
  for (int attempt = 0; attempt <= client_.config().max_retries; ++attempt) {
    const std::string reply = ask(probe);
    try {
      auto sections = parse_transcript(reply);
      return parse_description(sections.task_description);
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  throw TransportError("remote oracle returned malformed descriptions: " + last_error);
}

int RemoteOracle::executable_prefix(const worlds::ActionSeq& seq) {
  return executable_prefix_of(simulate(seq));
}

std::unique_ptr<consistency::WalkEnv> RemoteOracle::walk_env() {
  return std::make_unique<OracleWalkEnv>(*this);
}

// ---------------------------------------------------------------------------

OracleWalkEnv::OracleWalkEnv(ScenarioOracle& oracle) : oracle_(&oracle) {}

void OracleWalkEnv::reset() {
  prefix_.clear();
  stack_.clear();
}

const std::vector<std::string>& OracleWalkEnv::labels() const {
  return worlds::action_labels(oracle_->world());
}

bool OracleWalkEnv::executable(const std::string& label) {
  worlds::ActionSeq seq{prefix_};
  seq.actions.push_back(label);
  return oracle_->executable_prefix(seq) == static_cast<int>(seq.actions.size());
}

bool OracleWalkEnv::try_step(const std::string& label) {
  if (!executable(label)) return false;
  prefix_.push_back(label);
  return true;
}

consistency::StepInfo OracleWalkEnv::step_info(const std::string& label) {
  worlds::ActionSeq seq{prefix_};
  seq.actions.push_back(label);
  auto trace = oracle_->simulate(seq);
  const auto& step = trace.steps.back();
  return {step.executed, worlds::result_name(step.result), step.reasoning};
}

std::size_t OracleWalkEnv::save() {
  stack_.push_back(prefix_.size());
  return stack_.size() - 1;
}

void OracleWalkEnv::restore(std::size_t token) {
  prefix_.resize(stack_[token]);
  stack_.resize(token);
}

}  // namespace plansim::oracle
