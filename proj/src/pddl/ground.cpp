#include "plansim/pddl/ground.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace plansim::pddl {

namespace {

constexpr std::size_t kInstanceCap = 2'000'000;

bool is_variable(const std::string& term) { return !term.empty() && term[0] == '?'; }

struct ObjectTable {
  std::vector<std::string> all;
  std::unordered_map<std::string, std::vector<std::string>> by_type;
  std::unordered_map<std::string, std::optional<std::string>> type_of;

  explicit ObjectTable(const Problem& problem) {
    for (const auto& obj : problem.objects) {
      all.push_back(obj.name);
      type_of[obj.name] = obj.type;
      if (obj.type) by_type[*obj.type].push_back(obj.name);
    }
  }

  const std::vector<std::string>& candidates(const std::optional<std::string>& type) const {
    if (!type) return all;
    auto it = by_type.find(*type);
    static const std::vector<std::string> empty;
    return it == by_type.end() ? empty : it->second;
  }

  bool type_ok(const std::string& object, const std::optional<std::string>& wanted) const {
    if (!wanted) return true;
    auto it = type_of.find(object);
    if (it == type_of.end()) return true;  // unknown object, let closed world decide
    return !it->second || *it->second == *wanted;
  }
};

/// Enumerates bindings of a schema's parameters such that every positive
/// precondition is in `contains`, joining literal-by-literal (fewest unbound
/// variables first). Negative preconditions with `check_negative(pred)==true`
/// are tested against `contains` too; the rest are left to the caller.
class Instantiator {
 public:
  Instantiator(const ActionSchema& schema, const ObjectTable& objects,
               const std::unordered_map<std::string, std::vector<const GroundAtom*>>& index,
               std::function<bool(const GroundAtom&)> contains,
               std::function<bool(const std::string&)> check_negative,
               std::function<void(std::vector<std::string>)> emit)
      : schema_(schema),
        objects_(objects),
        index_(index),
        contains_(std::move(contains)),
        check_negative_(std::move(check_negative)),
        emit_(std::move(emit)) {
    for (const auto& p : schema.params) param_type_[p.name] = p.type;
    for (const auto& lit : schema.preconditions)
      (lit.negated ? negatives_ : positives_).push_back(&lit);
  }

  void run() {
    std::vector<bool> used(positives_.size(), false);
    descend(used);
  }

 private:
  int unbound_vars(const Literal& lit) const {
    int n = 0;
    for (const auto& arg : lit.args)
      if (is_variable(arg) && !binding_.count(arg)) ++n;
    return n;
  }

  void descend(std::vector<bool>& used) {
    // Pick the cheapest unprocessed positive literal.
    int best = -1, best_unbound = 0;
    for (std::size_t i = 0; i < positives_.size(); ++i) {
      if (used[i]) continue;
      int u = unbound_vars(*positives_[i]);
      if (best < 0 || u < best_unbound) {
        best = static_cast<int>(i);
        best_unbound = u;
      }
    }
    if (best < 0) {
      finish_params(0);
      return;
    }
    used[best] = true;
    const Literal& lit = *positives_[best];
    if (best_unbound == 0) {
      if (contains_(instantiate(lit))) descend(used);
    } else {
      auto it = index_.find(lit.predicate);
      if (it != index_.end()) {
        for (const GroundAtom* atom : it->second) {
          if (atom->args.size() != lit.args.size()) continue;
          std::vector<std::string> bound_now;
          if (unify(lit, *atom, &bound_now)) descend(used);
          for (const auto& var : bound_now) binding_.erase(var);
        }
      }
    }
    used[best] = false;
  }

  bool unify(const Literal& lit, const GroundAtom& atom, std::vector<std::string>* bound_now) {
    for (std::size_t i = 0; i < lit.args.size(); ++i) {
      const std::string& term = lit.args[i];
      const std::string& value = atom.args[i];
      if (!is_variable(term)) {
        if (term != value) return false;
        continue;
      }
      auto it = binding_.find(term);
      if (it != binding_.end()) {
        if (it->second != value) return false;
        continue;
      }
      auto type_it = param_type_.find(term);
      const auto& wanted = type_it == param_type_.end() ? std::nullopt : type_it->second;
      if (!objects_.type_ok(value, wanted)) return false;
      binding_[term] = value;
      bound_now->push_back(term);
    }
    return true;
  }

  // Parameters not constrained by any positive literal range over all
  // type-compatible objects.
  void finish_params(std::size_t param_idx) {
    if (param_idx == schema_.params.size()) {
      check_negatives_and_emit();
      return;
    }
    const TypedName& param = schema_.params[param_idx];
    if (binding_.count(param.name)) {
      finish_params(param_idx + 1);
      return;
    }
    for (const auto& object : objects_.candidates(param.type)) {
      binding_[param.name] = object;
      finish_params(param_idx + 1);
    }
    binding_.erase(param.name);
  }

  void check_negatives_and_emit() {
    for (const Literal* lit : negatives_) {
      if (!check_negative_(lit->predicate)) continue;
      if (contains_(instantiate(*lit))) return;
    }
    std::vector<std::string> args;
    args.reserve(schema_.params.size());
    for (const auto& p : schema_.params) {
      auto it = binding_.find(p.name);
      if (it == binding_.end()) return;  // malformed schema; skip silently
      args.push_back(it->second);
    }
    emit_(std::move(args));
  }

  GroundAtom instantiate(const Literal& lit) const {
    GroundAtom atom{lit.predicate, {}};
    atom.args.reserve(lit.args.size());
    for (const auto& term : lit.args) {
      if (is_variable(term)) {
        auto it = binding_.find(term);
        atom.args.push_back(it == binding_.end() ? term : it->second);
      } else {
        atom.args.push_back(term);
      }
    }
    return atom;
  }

  const ActionSchema& schema_;
  const ObjectTable& objects_;
  const std::unordered_map<std::string, std::vector<const GroundAtom*>>& index_;
  std::function<bool(const GroundAtom&)> contains_;
  std::function<bool(const std::string&)> check_negative_;
  std::function<void(std::vector<std::string>)> emit_;
  std::vector<const Literal*> positives_;
  std::vector<const Literal*> negatives_;
  std::unordered_map<std::string, std::string> binding_;
  std::unordered_map<std::string, std::optional<std::string>> param_type_;
};

std::unordered_map<std::string, std::vector<const GroundAtom*>> index_atoms(
    const std::set<GroundAtom>& atoms) {
  std::unordered_map<std::string, std::vector<const GroundAtom*>> index;
  for (const auto& atom : atoms) index[atom.predicate].push_back(&atom);
  return index;
}

// Binds schema parameters to the action's argument list.
std::unordered_map<std::string, std::string> bind_args(const ActionSchema& schema,
                                                       const GroundAction& action) {
  if (schema.params.size() != action.args.size())
    throw Error("arity mismatch for action '" + action.name + "': expected " +
                std::to_string(schema.params.size()) + " arguments, got " +
                std::to_string(action.args.size()));
  std::unordered_map<std::string, std::string> binding;
  for (std::size_t i = 0; i < schema.params.size(); ++i)
    binding[schema.params[i].name] = action.args[i];
  return binding;
}

GroundAtom substitute(const Literal& lit,
                      const std::unordered_map<std::string, std::string>& binding) {
  GroundAtom atom{lit.predicate, {}};
  for (const auto& term : lit.args) {
    auto it = binding.find(term);
    atom.args.push_back(it == binding.end() ? term : it->second);
  }
  return atom;
}

}  // namespace

GroundState initial_state(const Problem& problem) {
  GroundState state;
  for (const auto& atom : problem.init) state.atoms.insert(atom);
  return state;
}

std::vector<GroundAction> applicable_actions(const Domain& domain, const Problem& problem,
                                             const GroundState& state) {
  ObjectTable objects(problem);
  auto index = index_atoms(state.atoms);
  std::vector<GroundAction> result;
  for (const auto& schema : domain.actions) {
    std::set<std::vector<std::string>> seen;
    Instantiator inst(
        schema, objects, index, [&](const GroundAtom& a) { return state.contains(a); },
        [](const std::string&) { return true; },
        [&](std::vector<std::string> args) {
          if (seen.insert(args).second) result.push_back({schema.name, std::move(args)});
        });
    inst.run();
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<GroundState> try_apply(const Domain& domain, const GroundState& state,
                                     const GroundAction& action) {
  const ActionSchema* schema = domain.find_action(action.name);
  if (!schema) throw Error("unknown action '" + action.name + "'");
  auto binding = bind_args(*schema, action);
  for (const auto& lit : schema->preconditions) {
    const bool holds = state.contains(substitute(lit, binding));
    if (holds == lit.negated) return std::nullopt;
  }
  GroundState next = state;
  for (const auto& lit : schema->effects)
    if (lit.negated) next.atoms.erase(substitute(lit, binding));
  for (const auto& lit : schema->effects)
    if (!lit.negated) next.atoms.insert(substitute(lit, binding));
  return next;
}

GroundState apply(const Domain& domain, const GroundState& state, const GroundAction& action) {
  auto next = try_apply(domain, state, action);
  if (!next) throw Error("inapplicable action " + action.to_string());
  return std::move(*next);
}

bool goal_satisfied(const Problem& problem, const GroundState& state) {
  for (const auto& lit : problem.goal) {
    const bool holds = state.contains({lit.predicate, lit.args});
    if (holds == lit.negated) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CompiledTask
// ---------------------------------------------------------------------------

CompiledTask::CompiledTask(const Domain& domain, const Problem& problem) {
  std::unordered_map<std::string, bool> is_static;
  for (const auto& p : domain.predicates) is_static[p.name] = true;
  for (const auto& a : domain.actions)
    for (const auto& lit : a.effects) is_static[lit.predicate] = false;
  auto static_pred = [&](const std::string& pred) {
    auto it = is_static.find(pred);
    return it == is_static.end() ? true : it->second;
  };

  ObjectTable objects(problem);

  // Delete-relaxed reachability: grow the atom set and instance table until
  // nothing new appears. Negative preconditions on dynamic atoms are deferred
  // to run time; on static atoms they are resolved here for good.
  std::set<GroundAtom> reached;
  for (const auto& atom : problem.init) reached.insert(atom);
  std::set<std::pair<std::string, std::vector<std::string>>> instance_keys;
  struct RawInstance {
    const ActionSchema* schema;
    std::vector<std::string> args;
  };
  std::vector<RawInstance> raw;

  bool grew = true;
  while (grew) {
    grew = false;
    auto index = index_atoms(reached);
    for (const auto& schema : domain.actions) {
      std::vector<std::vector<std::string>> found;
      Instantiator inst(
          schema, objects, index, [&](const GroundAtom& a) { return reached.count(a) > 0; },
          [&](const std::string& pred) { return static_pred(pred); },
          [&](std::vector<std::string> args) { found.push_back(std::move(args)); });
      inst.run();
      for (auto& args : found) {
        if (!instance_keys.insert({schema.name, args}).second) continue;
        if (instance_keys.size() > kInstanceCap) throw Error("grounding exceeded instance cap");
        raw.push_back({&schema, args});
        grew = true;
      }
    }
    // Apply add effects of all known instances until the atom set stabilizes.
    bool atoms_grew = true;
    while (atoms_grew) {
      atoms_grew = false;
      for (const auto& ri : raw) {
        auto binding = bind_args(*ri.schema, {ri.schema->name, ri.args});
        bool ok = true;
        for (const auto& lit : ri.schema->preconditions) {
          if (lit.negated) continue;
          if (!reached.count(substitute(lit, binding))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (const auto& lit : ri.schema->effects) {
          if (lit.negated) continue;
          if (reached.insert(substitute(lit, binding)).second) atoms_grew = grew = true;
        }
      }
    }
  }

  // Number the dynamic atoms.
  std::map<GroundAtom, std::uint32_t> atom_id;
  for (const auto& atom : reached) {
    if (static_pred(atom.predicate)) {
      static_atoms_.insert(atom);
    } else {
      atom_id.emplace(atom, static_cast<std::uint32_t>(dyn_atoms_.size()));
      dyn_atoms_.push_back(atom);
    }
  }

  initial_ = StateBits(dyn_atoms_.size());
  for (const auto& atom : problem.init) {
    auto it = atom_id.find(atom);
    if (it != atom_id.end()) initial_.set(it->second);
  }

  // Compile the instances.
  std::sort(raw.begin(), raw.end(), [](const RawInstance& a, const RawInstance& b) {
    if (a.schema->name != b.schema->name) return a.schema->name < b.schema->name;
    return a.args < b.args;
  });
  for (const auto& ri : raw) {
    auto binding = bind_args(*ri.schema, {ri.schema->name, ri.args});
    Instance inst;
    inst.schema = ri.schema->name;
    inst.args = ri.args;
    bool feasible = true;
    for (const auto& lit : ri.schema->preconditions) {
      GroundAtom atom = substitute(lit, binding);
      auto it = atom_id.find(atom);
      if (!lit.negated) {
        if (it == atom_id.end()) {
          if (!static_atoms_.count(atom)) feasible = false;  // can never hold
        } else {
          inst.pre_pos.push_back(it->second);
        }
      } else {
        if (it != atom_id.end()) {
          inst.pre_neg.push_back(it->second);
        } else if (static_atoms_.count(atom)) {
          feasible = false;  // statically violated
        }
      }
      if (!feasible) break;
    }
    if (!feasible) continue;
    for (const auto& lit : ri.schema->effects) {
      GroundAtom atom = substitute(lit, binding);
      auto it = atom_id.find(atom);
      if (it == atom_id.end()) continue;  // unreachable atom: add/delete is a no-op
      (lit.negated ? inst.del : inst.add).push_back(it->second);
    }
    by_schema_[inst.schema].push_back(instances_.size());
    instances_.push_back(std::move(inst));
  }

  // Goal condition against the numbered universe.
  for (const auto& lit : problem.goal) {
    GroundAtom atom{lit.predicate, lit.args};
    auto it = atom_id.find(atom);
    if (!lit.negated) {
      if (it != atom_id.end()) {
        goal_pos_.push_back(it->second);
      } else if (!static_atoms_.count(atom)) {
        goal_impossible_ = true;
      }
    } else {
      if (it != atom_id.end()) {
        goal_neg_.push_back(it->second);
      } else if (static_atoms_.count(atom)) {
        goal_impossible_ = true;
      }
    }
  }
}

bool CompiledTask::applicable(const StateBits& state, std::size_t idx) const {
  const Instance& inst = instances_[idx];
  for (std::uint32_t bit : inst.pre_pos)
    if (!state.test(bit)) return false;
  for (std::uint32_t bit : inst.pre_neg)
    if (state.test(bit)) return false;
  return true;
}

StateBits CompiledTask::apply(const StateBits& state, std::size_t idx) const {
  const Instance& inst = instances_[idx];
  StateBits next = state;
  for (std::uint32_t bit : inst.del) next.clear(bit);
  for (std::uint32_t bit : inst.add) next.set(bit);
  return next;
}

std::vector<std::size_t> CompiledTask::applicable_now(const StateBits& state) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instances_.size(); ++i)
    if (applicable(state, i)) out.push_back(i);
  return out;
}

bool CompiledTask::goal_satisfied(const StateBits& state) const {
  if (goal_impossible_) return false;
  for (std::uint32_t bit : goal_pos_)
    if (!state.test(bit)) return false;
  for (std::uint32_t bit : goal_neg_)
    if (state.test(bit)) return false;
  return true;
}

std::span<const std::size_t> CompiledTask::schema_instances(const std::string& schema) const {
  auto it = by_schema_.find(schema);
  if (it == by_schema_.end()) return {};
  return {it->second.data(), it->second.size()};
}

std::optional<std::size_t> CompiledTask::find_instance(const GroundAction& action) const {
  for (std::size_t idx : schema_instances(action.name))
    if (instances_[idx].args == action.args) return idx;
  return std::nullopt;
}

GroundState CompiledTask::to_public(const StateBits& state) const {
  GroundState out;
  out.atoms = static_atoms_;
  for (std::size_t i = 0; i < dyn_atoms_.size(); ++i)
    if (state.test(i)) out.atoms.insert(dyn_atoms_[i]);
  return out;
}

}  // namespace plansim::pddl
