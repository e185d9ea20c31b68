#include "plansim/genclient/remote.hpp"

#include "plansim/pddl/printer.hpp"
#include "plansim/util/fs.hpp"
#include "plansim/util/strings.hpp"
#include "plansim/worlds/pddl_export.hpp"

namespace plansim::genclient {

namespace {

std::string replace_all(std::string text, const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
  return text;
}

// Balanced-parenthesis scan from the first occurrence of the opener.
std::string balanced_form(const std::string& text, const std::string& opener) {
  std::size_t start = text.find(opener);
  if (start == std::string::npos) return "";
  int depth = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') {
      --depth;
      if (depth == 0) return text.substr(start, i - start + 1);
    }
  }
  return "";
}

// All single- or double-quoted string literals inside text[pos..end).
std::vector<std::string> quoted_literals(const std::string& text, std::size_t begin,
                                         std::size_t end) {
  std::vector<std::string> out;
  for (std::size_t i = begin; i < end && i < text.size(); ++i) {
    if (text[i] == '\'' || text[i] == '"') {
      const char quote = text[i];
      std::size_t close = text.find(quote, i + 1);
      if (close == std::string::npos || close > end) break;
      out.push_back(text.substr(i + 1, close - i - 1));
      i = close;
    }
  }
  return out;
}

}  // namespace

std::string extract_pddl(const std::string& reply, const std::string& define_kind) {
  const std::string opener = "(define (" + define_kind;
  // Prefer fenced blocks so prose mentioning "(define" does not confuse us.
  std::size_t pos = 0;
  while ((pos = reply.find("```", pos)) != std::string::npos) {
    std::size_t body_start = reply.find('\n', pos);
    if (body_start == std::string::npos) break;
    std::size_t fence_end = reply.find("```", body_start);
    if (fence_end == std::string::npos) break;
    std::string block = reply.substr(body_start + 1, fence_end - body_start - 1);
    if (block.find(opener) != std::string::npos) {
      std::string form = balanced_form(block, opener);
      if (!form.empty()) return form;
    }
    pos = fence_end + 3;
  }
  return balanced_form(reply, opener);
}

std::string apply_edit_functions(const std::string& reply, const pddl::Domain& domain_template) {
  pddl::Domain domain = domain_template;
  bool any = false;

  std::size_t pos = reply.find("add_or_update_predicates");
  if (pos != std::string::npos) {
    std::size_t open = reply.find('[', pos);
    std::size_t close = reply.find(']', open);
    if (open != std::string::npos && close != std::string::npos) {
      domain.predicates.clear();
      for (const auto& literal : quoted_literals(reply, open, close)) {
        // Parse "(pred ?a ?b)" through the domain parser.
        auto parsed = pddl::parse_domain("(define (domain x) (:predicates " + literal + "))");
        if (parsed.ok() && parsed.value->predicates.size() == 1) {
          domain.predicates.push_back(parsed.value->predicates[0]);
          any = true;
        }
      }
    }
  }

  pos = 0;
  while ((pos = reply.find("modify_action", pos)) != std::string::npos) {
    std::size_t call_open = reply.find('(', pos);
    if (call_open == std::string::npos) break;
    // Arguments: 'name', [pre...], [eff...]
    std::size_t name_q = reply.find_first_of("'\"", call_open);
    if (name_q == std::string::npos) break;
    char quote = reply[name_q];
    std::size_t name_end = reply.find(quote, name_q + 1);
    if (name_end == std::string::npos) break;
    const std::string action_name = to_lower(reply.substr(name_q + 1, name_end - name_q - 1));
    std::size_t pre_open = reply.find('[', name_end);
    std::size_t pre_close = reply.find(']', pre_open);
    std::size_t eff_open = reply.find('[', pre_close);
    std::size_t eff_close = reply.find(']', eff_open);
    if (pre_open == std::string::npos || eff_close == std::string::npos) break;

    auto parse_literals = [&](std::size_t b, std::size_t e) {
      std::vector<pddl::Literal> lits;
      for (const auto& text : quoted_literals(reply, b, e)) {
        auto parsed = pddl::parse_domain(
            "(define (domain x) (:predicates) (:action a :parameters () :precondition " + text +
            " :effect ()))");
        // Parsed with undeclared predicates: structure is still intact.
        if (parsed.value && !parsed.value->actions.empty() &&
            parsed.value->actions[0].preconditions.size() == 1)
          lits.push_back(parsed.value->actions[0].preconditions[0]);
      }
      return lits;
    };
    for (auto& action : domain.actions) {
      if (action.name == action_name) {
        action.preconditions = parse_literals(pre_open, pre_close);
        action.effects = parse_literals(eff_open, eff_close);
        any = true;
      }
    }
    pos = eff_close;
  }
  if (!any) return "";
  return pddl::print_domain(domain);
}

RemoteGenerator::RemoteGenerator(oracle::ChatClient client, worlds::World world,
                                 std::filesystem::path prompt_dir)
    : client_(std::move(client)), world_(world), prompt_dir_(std::move(prompt_dir)) {}

std::string RemoteGenerator::fill_prompt(const std::string& file, const GenRequest& request,
                                         const std::string& problem_pddl) const {
  std::string text = read_file(prompt_dir_ / file);
  text = replace_all(text, "{domain_name}", worlds::world_name(world_));
  text = replace_all(text, "{domain_description}", request.domain_description);
  text = replace_all(text, "{problem_description}", request.scenario_description);
  text = replace_all(text, "{problem_pddl}", problem_pddl);
  text = replace_all(text, "{prior_domain}", request.prior_domain);
  text = replace_all(text, "{prior_problem}", request.prior_problem);
  text = replace_all(text, "{feedback}", request.feedback);
  text = replace_all(text, "{domain_template}",
                     pddl::print_domain(worlds::domain_template(world_)));
  pddl::Problem problem_template;
  problem_template.name = worlds::world_name(world_);
  problem_template.domain_name = worlds::world_name(world_);
  text = replace_all(text, "{problem_template}", pddl::print_problem(problem_template));
  if (!request.example_problem.empty())
    text = replace_all(text, "{example_problem}", request.example_problem);
  return text;
}

GenResult RemoteGenerator::generate(const GenRequest& request) {
  check_request(request);
  switch (request.phase) {
    case Phase::InitialProblem:
    case Phase::InitialDomain: {
      // Two calls: the problem file first, then the domain conditioned on it.
      std::string reply = client_.complete({{"user", fill_prompt("problem_generation.txt",
                                                                 request, "")}});
      const std::string problem_text = extract_pddl(reply, "problem");
      reply = client_.complete(
          {{"user", fill_prompt("domain_generation.txt", request, problem_text)}});
      std::string domain_text = extract_pddl(reply, "domain");
      if (domain_text.empty())
        domain_text = apply_edit_functions(reply, worlds::domain_template(world_));
      return parse_gen_output(domain_text, problem_text);
    }
    case Phase::InstantiateProblem: {
      GenRequest with_example = request;
      std::string prompt = fill_prompt("problem_generation.txt", with_example, "");
      prompt += "\nA validated example problem file from the same domain:\n```pddl\n" +
                request.example_problem + "\n```\n";
      const std::string reply = client_.complete({{"user", prompt}});
      return parse_gen_output("", extract_pddl(reply, "problem"));
    }
    case Phase::Refine: {
      const std::string reply =
          client_.complete({{"user", fill_prompt("update.txt", request, "")}});
      std::string domain_text = extract_pddl(reply, "domain");
      std::string problem_text = extract_pddl(reply, "problem");
      if (domain_text.empty())
        domain_text = apply_edit_functions(reply, worlds::domain_template(world_));
      // A reply may legitimately update only one file; keep the other.
      if (domain_text.empty()) domain_text = request.prior_domain;
      if (problem_text.empty()) problem_text = request.prior_problem;
      return parse_gen_output(domain_text, problem_text);
    }
  }
  throw Error("unhandled generation phase");
}

}  // namespace plansim::genclient
