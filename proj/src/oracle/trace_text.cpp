#include "plansim/oracle/trace_text.hpp"

#include "plansim/util/strings.hpp"

namespace plansim::oracle {

using worlds::ExecutionTrace;
using worlds::StepOutcome;

namespace {

constexpr const char* kSeparator = "----------------------------------------------";

constexpr const char* kPromptHeader =
    "<image>Given a sequence of actions and an image observation of the initial setup of a "
    "scenario, your goal is to decide the execution result after executing given actions. To "
    "achieve this task, you will first describe the setup you observe from the image, give the "
    "reasoning that explains how the player moves and the success or failure reason for each "
    "single action, then rate whether the overall execution is successful, and eventually "
    "describe whether the actions achieves the task's goal. ";

constexpr const char* kObservePrefix =
    "From the image we can observe the: Initial State Description: ";

}  // namespace

std::string render_prompt(const std::string& task_description,
                          const std::vector<std::string>& actions) {
  std::string out = kPromptHeader;
  out += "\n\nTask Description: " + task_description + "\nAction Sequence:\n";
  for (std::size_t i = 0; i < actions.size(); ++i)
    out += std::to_string(i + 1) + ": " + actions[i] + "\n";
  return out;
}

std::string render_transcript(const ScenarioDescription& description,
                              const ExecutionTrace& trace) {
  std::string out = kObservePrefix;
  out += "\n";
  out += description.text;
  out += "\n\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out += "Step " + std::to_string(i + 1) + " - Action " + step.action + ":\n";
    if (step.result == StepOutcome::Result::Invalid) {
      // Post-failure steps carry the result inline on the reasoning line.
      out += "Execution Reasoning: " + step.reasoning + " Execution result: Invalid.\n";
    } else {
      out += "Execution Reasoning: " + step.reasoning + "\n";
      out += "Execution result: " + std::string(worlds::result_name(step.result)) + ".\n";
    }
    out += kSeparator;
    out += "\n";
  }
  out += "Goal reaching: ";
  out += trace.goal_reached ? "Successful" : "Unsuccessful";
  out += "\n";
  return out;
}

TranscriptSections parse_transcript(const std::string& text) {
  TranscriptSections sections;
  const auto lines = split(text, '\n');
  std::size_t i = 0;

  // Optional observation prefix, then the description block up to the first
  // step header.
  if (i < lines.size() && lines[i].rfind("From the image", 0) == 0) ++i;
  std::vector<std::string> desc_lines;
  while (i < lines.size() && lines[i].rfind("Step ", 0) != 0 &&
         lines[i].rfind("Goal reaching:", 0) != 0) {
    desc_lines.push_back(lines[i]);
    ++i;
  }
  while (!desc_lines.empty() && trim(desc_lines.back()).empty()) desc_lines.pop_back();
  sections.task_description = join(desc_lines, "\n");

  while (i < lines.size() && lines[i].rfind("Step ", 0) == 0) {
    ++i;  // past "Step N - Action ...:"
    if (i >= lines.size() || lines[i].rfind("Execution Reasoning: ", 0) != 0)
      throw Error("transcript step " + std::to_string(sections.reasons.size() + 1) +
                  " is missing its reasoning line");
    std::string reason_line = lines[i].substr(std::string("Execution Reasoning: ").size());
    ++i;
    std::string result;
    const std::string inline_marker = " Execution result: ";
    if (auto pos = reason_line.find(inline_marker); pos != std::string::npos) {
      result = trim(reason_line.substr(pos + inline_marker.size()));
      reason_line = reason_line.substr(0, pos);
    } else {
      if (i >= lines.size() || lines[i].rfind("Execution result: ", 0) != 0)
        throw Error("transcript step " + std::to_string(sections.reasons.size() + 1) +
                    " is missing its result line");
      result = trim(lines[i].substr(std::string("Execution result: ").size()));
      ++i;
    }
    if (!result.empty() && result.back() == '.') result.pop_back();
    if (result != "Successful" && result != "Unsuccessful" && result != "Invalid")
      throw Error("transcript has unknown execution result '" + result + "'");
    sections.reasons.push_back(reason_line);
    sections.results.push_back(result);
    if (i < lines.size() && lines[i] == kSeparator) ++i;
  }

  if (i >= lines.size() || lines[i].rfind("Goal reaching:", 0) != 0)
    throw Error("transcript is missing the goal-reaching line");
  std::string verdict = trim(lines[i].substr(std::string("Goal reaching:").size()));
  if (!verdict.empty() && verdict.back() == '.') verdict.pop_back();
  if (verdict != "Successful" && verdict != "Unsuccessful")
    throw Error("transcript has unknown goal verdict '" + verdict + "'");
  sections.goal_reach = verdict;
  return sections;
}

ExecutionTrace trace_from_sections(const TranscriptSections& sections,
                                   const std::vector<std::string>& actions) {
  if (sections.results.size() != actions.size())
    throw Error("transcript has " + std::to_string(sections.results.size()) +
                " steps for " + std::to_string(actions.size()) + " actions");
  ExecutionTrace trace;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    worlds::TraceStep step;
    step.action = actions[i];
    step.reasoning = sections.reasons[i];
    const std::string& r = sections.results[i];
    step.result = r == "Successful" ? StepOutcome::Result::Successful
                : r == "Unsuccessful" ? StepOutcome::Result::Unsuccessful
                                      : StepOutcome::Result::Invalid;
    trace.steps.push_back(step);
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto& step = trace.steps[i];
    const bool terminal_after = i + 1 < trace.steps.size() &&
                                trace.steps[i + 1].result == StepOutcome::Result::Invalid;
    step.executed = step.result == StepOutcome::Result::Successful ||
                    (step.result == StepOutcome::Result::Unsuccessful && terminal_after);
  }
  trace.goal_reached = sections.goal_reach == "Successful";
  return trace;
}

}  // namespace plansim::oracle
