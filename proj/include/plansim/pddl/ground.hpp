#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "plansim/pddl/ast.hpp"
#include "plansim/util/error.hpp"

namespace plansim::pddl {

/// A closed-world state: the set of ground atoms that hold. std::set keeps
/// a canonical ordering so states hash and compare deterministically.
struct GroundState {
  std::set<GroundAtom> atoms;

  bool contains(const GroundAtom& atom) const { return atoms.count(atom) > 0; }
  bool operator==(const GroundState&) const = default;
};

GroundState initial_state(const Problem& problem);

/// All ground instantiations of domain actions whose preconditions hold in
/// `state` (negative literals read as closed-world absence). Objects come
/// from the problem; the result is sorted by (action name, args).
std::vector<GroundAction> applicable_actions(const Domain& domain, const Problem& problem,
                                             const GroundState& state);

/// Delete-then-add STRIPS application. Returns nullopt when the action's
/// preconditions do not hold. Throws Error for an unknown action name or an
/// arity mismatch.
std::optional<GroundState> try_apply(const Domain& domain, const GroundState& state,
                                     const GroundAction& action);

/// Like try_apply but an inapplicable action is an error too.
GroundState apply(const Domain& domain, const GroundState& state, const GroundAction& action);

bool goal_satisfied(const Problem& problem, const GroundState& state);

// ---------------------------------------------------------------------------
// Compiled representation
// ---------------------------------------------------------------------------

/// Fixed-width bitset sized at task-compile time.
class StateBits {
 public:
  StateBits() = default;
  explicit StateBits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
  void clear(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t word_count() const { return words_.size(); }

  bool operator==(const StateBits&) const = default;

  struct Hash {
    std::size_t operator()(const StateBits& b) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (std::uint64_t w : b.words_) {
        h ^= w;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
      }
      return static_cast<std::size_t>(h);
    }
  };

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  friend class CompiledTask;
  std::vector<std::uint64_t> words_;
};

/// A domain/problem pair grounded once for fast repeated execution.
///
/// Grounding runs a delete-relaxed reachability fixpoint from the initial
/// state, so the instance table covers every action that can ever become
/// applicable along real trajectories. States track only dynamic atoms
/// (predicates that appear in some effect); static atoms are folded into
/// the instance table at compile time.
class CompiledTask {
 public:
  CompiledTask(const Domain& domain, const Problem& problem);

  struct Instance {
    std::string schema;
    std::vector<std::string> args;
    std::vector<std::uint32_t> pre_pos;  // dynamic atom ids that must hold
    std::vector<std::uint32_t> pre_neg;  // dynamic atom ids that must not hold
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> del;

    GroundAction to_action() const { return {schema, args}; }
  };

  StateBits initial() const { return initial_; }
  bool applicable(const StateBits& state, std::size_t instance_idx) const;
  StateBits apply(const StateBits& state, std::size_t instance_idx) const;
  std::vector<std::size_t> applicable_now(const StateBits& state) const;

  /// True when the goal can be ruled out statically (a positive goal atom
  /// that is not even delete-relaxed reachable).
  bool goal_impossible() const { return goal_impossible_; }
  bool goal_satisfied(const StateBits& state) const;

  const std::vector<Instance>& instances() const { return instances_; }
  /// Instance ids for one schema, in sorted (args) order.
  std::span<const std::size_t> schema_instances(const std::string& schema) const;
  std::optional<std::size_t> find_instance(const GroundAction& action) const;

  GroundState to_public(const StateBits& state) const;
  std::size_t dynamic_atom_count() const { return dyn_atoms_.size(); }

 private:
  std::vector<GroundAtom> dyn_atoms_;  // id -> atom
  std::set<GroundAtom> static_atoms_;
  StateBits initial_;
  std::vector<Instance> instances_;  // sorted by (schema, args)
  std::unordered_map<std::string, std::vector<std::size_t>> by_schema_;
  std::vector<std::uint32_t> goal_pos_;
  std::vector<std::uint32_t> goal_neg_;
  bool goal_impossible_ = false;
};

}  // namespace plansim::pddl
