#include "plansim/genclient/generator.hpp"

#include "plansim/pddl/printer.hpp"
#include "plansim/worlds/pddl_export.hpp"

namespace plansim::genclient {

void check_request(const GenRequest& request) {
  switch (request.phase) {
    case Phase::Refine:
      if (request.prior_domain.empty() || request.prior_problem.empty())
        throw Error("Refine requests need the prior domain and problem files");
      if (request.feedback.empty()) throw Error("Refine requests need non-empty feedback");
      break;
    case Phase::InstantiateProblem:
      if (request.example_problem.empty())
        throw Error("InstantiateProblem requests need an in-context example problem file");
      break;
    default: break;
  }
}

GenResult parse_gen_output(std::string domain_text, std::string problem_text) {
  GenResult result;
  result.domain_text = std::move(domain_text);
  result.problem_text = std::move(problem_text);
  if (!result.domain_text.empty()) {
    auto parsed = pddl::parse_domain(result.domain_text);
    if (parsed.ok()) {
      result.domain = std::move(parsed.value);
    } else {
      result.parse_errors += "domain: " + parsed.error_text() + "\n";
    }
  }
  if (!result.problem_text.empty()) {
    auto parsed = pddl::parse_problem(result.problem_text);
    if (parsed.ok()) {
      result.problem = std::move(parsed.value);
    } else {
      result.parse_errors += "problem: " + parsed.error_text() + "\n";
    }
  }
  return result;
}

GenResult GoldenGenerator::generate(const GenRequest& request) {
  check_request(request);
  if (request.scenario == nullptr)
    throw Error("scripted generators need the scenario attached to the request");
  auto [domain, problem] = worlds::ground_truth_pddl(*request.scenario);
  if (request.phase == Phase::InstantiateProblem)
    return parse_gen_output("", pddl::print_problem(problem));
  return parse_gen_output(pddl::print_domain(domain), pddl::print_problem(problem));
}

}  // namespace plansim::genclient
