#pragma once

#include <filesystem>
#include <string>

#include "plansim/pddl/ast.hpp"
#include "plansim/pddl/parser.hpp"
#include "plansim/util/fs.hpp"
#include "plansim/util/rng.hpp"

namespace testutil {

inline std::filesystem::path fixture_dir() { return PLANSIM_FIXTURE_DIR; }

inline std::string fixture_text(const std::string& name) {
  return plansim::read_file(fixture_dir() / name);
}

inline plansim::pddl::Domain fixture_domain(const std::string& name) {
  auto parsed = plansim::pddl::parse_domain(fixture_text(name));
  if (!parsed.ok()) throw plansim::Error("fixture " + name + " failed to parse:\n" + parsed.error_text());
  return *parsed.value;
}

inline plansim::pddl::Problem fixture_problem(const std::string& name) {
  auto parsed = plansim::pddl::parse_problem(fixture_text(name));
  if (!parsed.ok()) throw plansim::Error("fixture " + name + " failed to parse:\n" + parsed.error_text());
  return *parsed.value;
}

/// Random well-formed AST generator for round-trip property tests.
/// Typed lists come out either fully typed or fully untyped, matching how
/// PDDL files are written in practice (a mixed list does not have a
/// faithful surface syntax).
struct AstGen {
  plansim::Rng rng;

  explicit AstGen(std::uint64_t seed) : rng(seed) {}

  std::string name(const char* prefix, int i) { return std::string(prefix) + std::to_string(i); }

  plansim::pddl::Domain domain() {
    plansim::pddl::Domain d;
    d.name = name("dom", rng.next_int(0, 99));
    const bool typed = rng.next_bool(0.5);
    d.requirements.push_back(":strips");
    if (typed) d.requirements.push_back(":typing");
    const int ntypes = typed ? rng.next_int(1, 3) : 0;
    for (int i = 0; i < ntypes; ++i) d.types.push_back(name("type", i));
    const int npreds = rng.next_int(1, 5);
    for (int i = 0; i < npreds; ++i) {
      plansim::pddl::PredicateDecl p;
      p.name = name("pred", i);
      const int arity = rng.next_int(0, 3);
      for (int j = 0; j < arity; ++j) {
        std::optional<std::string> t;
        if (typed) t = d.types[rng.next_below(d.types.size())];
        p.params.push_back({name("?v", j), t});
      }
      d.predicates.push_back(p);
    }
    const int nactions = rng.next_int(0, 4);
    for (int i = 0; i < nactions; ++i) {
      plansim::pddl::ActionSchema a;
      a.name = name("act", i);
      const int nparams = rng.next_int(0, 3);
      for (int j = 0; j < nparams; ++j) {
        std::optional<std::string> t;
        if (typed) t = d.types[rng.next_below(d.types.size())];
        a.params.push_back({name("?p", j), t});
      }
      auto random_literal = [&](bool allow_neg) {
        const auto& pred = d.predicates[rng.next_below(d.predicates.size())];
        plansim::pddl::Literal lit;
        lit.negated = allow_neg && rng.next_bool(0.3);
        lit.predicate = pred.name;
        for (std::size_t j = 0; j < pred.params.size(); ++j) {
          if (!a.params.empty() && rng.next_bool(0.8)) {
            lit.args.push_back(a.params[rng.next_below(a.params.size())].name);
          } else {
            lit.args.push_back(name("obj", rng.next_int(0, 5)));
          }
        }
        return lit;
      };
      const int npre = rng.next_int(0, 3);
      for (int j = 0; j < npre; ++j) a.preconditions.push_back(random_literal(true));
      const int neff = rng.next_int(0, 3);
      for (int j = 0; j < neff; ++j) a.effects.push_back(random_literal(true));
      d.actions.push_back(a);
    }
    return d;
  }

  plansim::pddl::Problem problem(const plansim::pddl::Domain& d) {
    plansim::pddl::Problem p;
    p.name = name("prob", rng.next_int(0, 99));
    p.domain_name = d.name;
    const bool typed = !d.types.empty();
    const int nobjs = rng.next_int(1, 6);
    for (int i = 0; i < nobjs; ++i) {
      std::optional<std::string> t;
      if (typed) t = d.types[rng.next_below(d.types.size())];
      p.objects.push_back({name("obj", i), t});
    }
    const int ninit = rng.next_int(0, 6);
    for (int i = 0; i < ninit; ++i) {
      const auto& pred = d.predicates[rng.next_below(d.predicates.size())];
      plansim::pddl::GroundAtom atom;
      atom.predicate = pred.name;
      for (std::size_t j = 0; j < pred.params.size(); ++j)
        atom.args.push_back(p.objects[rng.next_below(p.objects.size())].name);
      p.init.push_back(atom);
    }
    const int ngoal = rng.next_int(0, 3);
    for (int i = 0; i < ngoal; ++i) {
      const auto& pred = d.predicates[rng.next_below(d.predicates.size())];
      plansim::pddl::Literal lit;
      lit.negated = rng.next_bool(0.2);
      lit.predicate = pred.name;
      for (std::size_t j = 0; j < pred.params.size(); ++j)
        lit.args.push_back(p.objects[rng.next_below(p.objects.size())].name);
      p.goal.push_back(lit);
    }
    return p;
  }
};

}  // namespace testutil
