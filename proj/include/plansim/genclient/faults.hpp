#pragma once

#include <string>
#include <vector>

#include "plansim/genclient/generator.hpp"

namespace plansim::genclient {

/// How a defect is caught by the pipeline.
enum class FaultClass {
  Prescreen,  // validation violation, caught before any walks
  Walk,       // behavioural: exploration walks disagree
  Replay,     // goal-level: plans validate but the simulator replay misses the goal
};

struct FaultSpec {
  std::string id;
  FaultClass cls;
  std::vector<worlds::World> applicable;
  std::string description;
};

/// The defect catalog: seeded single-defect mutations of the reference pair,
/// each paired with the feedback class the consistency machinery emits.
const std::vector<FaultSpec>& fault_catalog();
const FaultSpec& fault_spec(const std::string& id);
bool fault_applicable(const std::string& id, worlds::World w);
std::vector<std::string> faults_for_world(worlds::World w);

/// Applies the defect to a reference pair. Exactly one seeded defect.
void inject_fault(const std::string& id, worlds::World w, pddl::Domain* domain,
                  pddl::Problem* problem);

/// Whether feedback text plausibly describes this fault (the repair key).
bool fault_feedback_matches(const std::string& id, const std::string& feedback);

/// Scripted generator double for "model mistakes": emits the reference pair
/// with one seeded defect, repairs it when refinement feedback matches the
/// fault, and re-emits a clean pair when regeneration is requested for
/// structural defects (prescreening's resample-and-retry behaviour).
class FaultyGenerator : public Generator {
 public:
  FaultyGenerator(std::string fault_id, bool repairing = true);

  GenResult generate(const GenRequest& request) override;
  std::string name() const override { return "scripted:fault=" + fault_id_; }

  int generate_calls() const { return generate_calls_; }

 private:
  std::string fault_id_;
  bool repairing_;
  bool repaired_ = false;
  int generate_calls_ = 0;
};

}  // namespace plansim::genclient
