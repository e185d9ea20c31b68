#pragma once

#include <filesystem>

#include "plansim/genclient/generator.hpp"
#include "plansim/oracle/chat_client.hpp"

namespace plansim::genclient {

/// Generator served by a remote chat model. Prompts are loaded from the
/// asset directory ({name}.txt with {placeholder} slots). Replies may be raw
/// PDDL in code fences or the two-function edit form applied to the world's
/// file template.
class RemoteGenerator : public Generator {
 public:
  RemoteGenerator(oracle::ChatClient client, worlds::World world,
                  std::filesystem::path prompt_dir);

  GenResult generate(const GenRequest& request) override;
  std::string name() const override { return "remote:" + client_.config().model; }

 private:
  std::string fill_prompt(const std::string& file, const GenRequest& request,
                          const std::string& problem_pddl) const;

  oracle::ChatClient client_;
  worlds::World world_;
  std::filesystem::path prompt_dir_;
};

/// Extracts the first fenced code block (```pddl or plain) containing the
/// wanted form, falling back to a balanced "(define ..." scan.
std::string extract_pddl(const std::string& reply, const std::string& define_kind);

/// Applies add_or_update_predicates/modify_action calls to a template
/// domain; returns the edited domain text, or empty when no calls found.
std::string apply_edit_functions(const std::string& reply, const pddl::Domain& domain_template);

}  // namespace plansim::genclient
