#include "plansim/pddl/validate.hpp"

#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "plansim/pddl/printer.hpp"
#include <json.hpp>

namespace plansim::pddl {

namespace {

class Checker {
 public:
  explicit Checker(ValidationReport* report) : report_(report) {}

  void add(std::string where, std::string code, std::string message) {
    report_->violations.push_back({std::move(code), std::move(message), std::move(where)});
  }

  void check_domain(const Domain& d) {
    std::unordered_set<std::string> type_names(d.types.begin(), d.types.end());
    std::unordered_set<std::string> seen_preds;
    for (const auto& p : d.predicates) {
      if (!seen_preds.insert(p.name).second)
        add("domain", "duplicate-predicate", "predicate '" + p.name + "' declared twice");
      for (const auto& param : p.params) check_type("domain", p.name, param, type_names);
    }
    std::unordered_set<std::string> seen_actions;
    for (const auto& a : d.actions) {
      if (!seen_actions.insert(a.name).second)
        add("domain", "duplicate-action", "action '" + a.name + "' declared twice");
      check_action(d, a, type_names);
    }
  }

  void check_action(const Domain& d, const ActionSchema& a,
                    const std::unordered_set<std::string>& type_names) {
    std::unordered_set<std::string> params;
    for (const auto& p : a.params) {
      if (p.name.empty() || p.name[0] != '?')
        add("domain", "bad-parameter", "action '" + a.name + "': parameter '" + p.name +
                                            "' must start with '?'");
      if (!params.insert(p.name).second)
        add("domain", "duplicate-parameter",
            "action '" + a.name + "': duplicate parameter '" + p.name + "'");
      check_type("domain", a.name, p, type_names);
    }
    auto check_lits = [&](const std::vector<Literal>& lits, const char* part) {
      for (const auto& lit : lits) {
        check_predicate_use(d, "domain", "action '" + a.name + "' " + part, lit.predicate,
                            lit.args.size());
        for (const auto& arg : lit.args) {
          if (!arg.empty() && arg[0] == '?' && !params.count(arg))
            add("domain", "unbound-variable", "action '" + a.name + "': variable '" + arg +
                                                  "' in " + part + " is not a parameter");
        }
      }
    };
    check_lits(a.preconditions, "precondition");
    check_lits(a.effects, "effect");
    // No literal may be both added and deleted by the same effect.
    std::set<std::pair<std::string, std::vector<std::string>>> adds, dels;
    for (const auto& lit : a.effects)
      (lit.negated ? dels : adds).insert({lit.predicate, lit.args});
    for (const auto& atom : adds) {
      if (dels.count(atom))
        add("domain", "conflicting-effect",
            "action '" + a.name + "': literal (" + atom.first + " ...) is both added and deleted");
    }
  }

  void check_problem(const Problem& p) {
    std::unordered_set<std::string> names;
    for (const auto& obj : p.objects) {
      if (!names.insert(obj.name).second)
        add("problem", "duplicate-object", "object '" + obj.name + "' declared twice");
    }
    for (const auto& atom : p.init) {
      for (const auto& arg : atom.args) {
        if (!names.count(arg))
          add("problem", "undeclared-object",
              "init atom " + print_atom(atom) + " references undeclared object '" + arg + "'");
      }
    }
    for (const auto& lit : p.goal) {
      for (const auto& arg : lit.args) {
        if (!arg.empty() && arg[0] == '?') {
          add("problem", "nonground-goal", "goal literal " + print_literal(lit) + " is not ground");
        } else if (!names.count(arg)) {
          add("problem", "undeclared-object",
              "goal literal " + print_literal(lit) + " references undeclared object '" + arg + "'");
        }
      }
    }
  }

  void check_pair(const Domain& d, const Problem& p) {
    if (p.domain_name != d.name)
      add("problem", "domain-name-mismatch", "problem names domain '" + p.domain_name +
                                                 "' but the domain file defines '" + d.name + "'");
    std::unordered_set<std::string> type_names(d.types.begin(), d.types.end());
    const bool typed = !d.types.empty();
    std::unordered_map<std::string, std::optional<std::string>> object_types;
    for (const auto& obj : p.objects) {
      object_types[obj.name] = obj.type;
      if (obj.type && !type_names.count(*obj.type))
        add("problem", "unknown-type",
            "object '" + obj.name + "' has unknown type '" + *obj.type + "'");
      if (typed && !obj.type)
        add("problem", "missing-object-type",
            "object '" + obj.name + "' has no type but the domain declares types");
    }
    auto check_ground = [&](const std::string& pred, const std::vector<std::string>& args,
                            const std::string& context) {
      const PredicateDecl* decl = d.find_predicate(pred);
      if (!decl) {
        add("problem", "undeclared-predicate",
            context + " uses undeclared predicate '" + pred + "'");
        return;
      }
      if (decl->params.size() != args.size()) {
        add("problem", "arity-mismatch",
            context + ": predicate '" + pred + "' expects " + std::to_string(decl->params.size()) +
                " arguments, got " + std::to_string(args.size()));
        return;
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        auto it = object_types.find(args[i]);
        if (it == object_types.end()) continue;  // undeclared-object reported elsewhere
        const auto& expected = decl->params[i].type;
        if (expected && it->second && *expected != *it->second)
          add("problem", "type-mismatch",
              context + ": argument '" + args[i] + "' of '" + pred + "' has type '" + *it->second +
                  "', expected '" + *expected + "'");
      }
    };
    for (const auto& atom : p.init)
      check_ground(atom.predicate, atom.args, "init atom " + print_atom(atom));
    for (const auto& lit : p.goal)
      check_ground(lit.predicate, lit.args, "goal literal " + print_literal(lit));
  }

  void check_predicate_use(const Domain& d, const char* where, const std::string& context,
                           const std::string& pred, std::size_t arity) {
    const PredicateDecl* decl = d.find_predicate(pred);
    if (!decl) {
      add(where, "undeclared-predicate", context + " uses undeclared predicate '" + pred + "'");
    } else if (decl->params.size() != arity) {
      add(where, "arity-mismatch",
          context + ": predicate '" + pred + "' expects " + std::to_string(decl->params.size()) +
              " arguments, got " + std::to_string(arity));
    }
  }

  void check_type(const char* where, const std::string& context, const TypedName& item,
                  const std::unordered_set<std::string>& type_names) {
    if (item.type && !type_names.count(*item.type))
      add(where, "unknown-type",
          "'" + context + "': parameter '" + item.name + "' has unknown type '" + *item.type + "'");
  }

 private:
  ValidationReport* report_;
};

}  // namespace

std::string ValidationReport::to_text() const {
  if (violations.empty()) return "valid";
  std::ostringstream out;
  for (const auto& v : violations) out << v.where << ": " << v.code << ": " << v.message << "\n";
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : violations)
    arr.push_back({{"code", v.code}, {"message", v.message}, {"where", v.where}});
  return nlohmann::json{{"valid", violations.empty()}, {"violations", arr}}.dump(2);
}

ValidationReport validate_domain(const Domain& domain) {
  ValidationReport report;
  Checker(&report).check_domain(domain);
  return report;
}

ValidationReport validate_problem(const Problem& problem) {
  ValidationReport report;
  Checker(&report).check_problem(problem);
  return report;
}

ValidationReport validate_pair(const Domain& domain, const Problem& problem) {
  ValidationReport report;
  Checker checker(&report);
  checker.check_domain(domain);
  checker.check_problem(problem);
  checker.check_pair(domain, problem);
  return report;
}

}  // namespace plansim::pddl
