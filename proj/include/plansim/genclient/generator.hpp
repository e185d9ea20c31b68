#pragma once

#include <memory>
#include <optional>
#include <string>

#include "plansim/pddl/parser.hpp"
#include "plansim/worlds/scenario.hpp"

namespace plansim::genclient {

enum class Phase { InitialProblem, InitialDomain, Refine, InstantiateProblem };

/// What the generator role receives. Scripted generators read the scenario
/// field (their stand-in for vision); remote generators ignore it and use
/// the descriptions.
struct GenRequest {
  Phase phase = Phase::InitialDomain;
  std::string domain_description;    // n_d
  std::string scenario_description;  // n_p
  std::string image_reference;       // optional path, for logging/prompting
  std::string prior_domain;          // Refine
  std::string prior_problem;         // Refine
  std::string feedback;              // Refine
  std::string example_problem;       // InstantiateProblem
  const worlds::GridScenario* scenario = nullptr;
};

/// Raw texts plus parse results. Unparseable output is never repaired
/// silently; the raw text is preserved for the feedback loop.
struct GenResult {
  std::string domain_text;
  std::string problem_text;
  std::optional<pddl::Domain> domain;
  std::optional<pddl::Problem> problem;
  std::string parse_errors;
  bool repaired = false;  // scripted: a keyed fix was applied
  bool flagged = false;   // scripted: feedback did not match the fault
};

class Generator {
 public:
  virtual ~Generator() = default;
  virtual GenResult generate(const GenRequest& request) = 0;
  virtual std::string name() const = 0;
};

/// Throws when a request violates its phase's invariants (Refine without
/// prior files or feedback, InstantiateProblem without the example, ...).
void check_request(const GenRequest& request);

/// Parses both texts into a GenResult, collecting diagnostics.
GenResult parse_gen_output(std::string domain_text, std::string problem_text);

/// Emits the simulator-derived reference pair: the oracle pass-through used
/// as the best-case generator in closed-loop tests.
class GoldenGenerator : public Generator {
 public:
  GenResult generate(const GenRequest& request) override;
  std::string name() const override { return "scripted:golden"; }
};

}  // namespace plansim::genclient
