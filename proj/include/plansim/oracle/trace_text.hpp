#pragma once

#include <string>
#include <vector>

#include "plansim/oracle/description.hpp"
#include "plansim/worlds/step.hpp"

namespace plansim::oracle {

/// The four exact-match sections a transcript decomposes into.
struct TranscriptSections {
  std::string task_description;        // the initial-state description block
  std::vector<std::string> reasons;    // per-step reasoning sentences
  std::vector<std::string> results;    // per-step "Successful"/"Unsuccessful"/"Invalid"
  std::string goal_reach;              // "Successful" | "Unsuccessful"
};

/// Renders the model-facing input: task header, task description and the
/// numbered action list.
std::string render_prompt(const std::string& task_description,
                          const std::vector<std::string>& actions);

/// Renders the full expected output: description block, one block per step
/// separated by dashed lines, and the goal-reaching line. Byte-stable.
std::string render_transcript(const ScenarioDescription& description,
                              const worlds::ExecutionTrace& trace);

/// Parses a transcript back into sections; the inverse of render_transcript
/// up to the executed-bit, which text does not carry. Throws on malformed
/// input rather than guessing.
TranscriptSections parse_transcript(const std::string& text);

/// Rebuilds an ExecutionTrace from parsed sections (used by the remote
/// oracle). Executed bits are inferred: a step executed if it was
/// Successful, or if it was Unsuccessful and the following step is Invalid
/// (a terminal failure visibly happened).
worlds::ExecutionTrace trace_from_sections(const TranscriptSections& sections,
                                           const std::vector<std::string>& actions);

}  // namespace plansim::oracle
