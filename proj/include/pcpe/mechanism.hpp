#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pcpe/automaton.hpp"
#include "pcpe/object_model.hpp"

namespace pcpe {

// Declarative behavior implementation. Each method is a pipeline over
// named slots; the owning disseminator wires slots to datastreams.
struct StepSelect {
  std::string slot;

  friend bool operator==(const StepSelect&, const StepSelect&) = default;
};
struct StepSelectIndexed {
  std::string slot_prefix;
  std::string arg_name;  // slot = slot_prefix + rendered arg value

  friend bool operator==(const StepSelectIndexed&, const StepSelectIndexed&) = default;
};
struct StepConcat {
  friend bool operator==(const StepConcat&, const StepConcat&) = default;
};
struct StepLabel {
  std::string mime_type;

  friend bool operator==(const StepLabel&, const StepLabel&) = default;
};
using PipelineStep = std::variant<StepSelect, StepSelectIndexed, StepConcat, StepLabel>;

struct MethodImpl {
  std::vector<PipelineStep> pipeline;
  std::string mime_type;  // default result type; a label step overrides

  friend bool operator==(const MethodImpl&, const MethodImpl&) = default;
};

struct MechanismModule {
  std::string id;
  std::string interface_id;
  std::vector<std::string> slots;
  std::map<std::string, MethodImpl> methods;

  friend bool operator==(const MechanismModule&, const MechanismModule&) = default;
};

// Static checks: method table covers exactly the interface's methods,
// slot references are declared, indexed args exist on the signature,
// every pipeline produces exactly one result.
std::vector<Diagnostic> validate_mechanism(const MechanismModule& mech,
                                           const BehaviorInterface& iface);

ojson mechanism_to_json(const MechanismModule& mech);
MechanismModule mechanism_from_json(const json& j);

struct DisseminationResult {
  std::string mime_type;
  Bytes payload;

  friend bool operator==(const DisseminationResult&, const DisseminationResult&) = default;
};

// A denial. First-class result, not a fault: callers must distinguish
// "denied" from "broken".
struct PolicyViolation {
  std::string policy_name;
  std::string scope;  // "default" or the disseminator id, filled by the repository
  std::size_t handler_index = 0;
  std::string reason;  // rendered pattern + guard of the failing handler
  SourcePos pos;

  std::string message() const;
};

// Fetches the bytes bound to a mechanism slot. Throwing marks the fetch
// failed; the weaver reports it as PipelineFailure.
using SlotResolver = std::function<Bytes(const std::string& slot)>;

struct InvocationContext {
  Principal principal;
  AutomatonState state;
  SlotResolver resolver;
  // Test seam: called once at the single automaton-consultation site.
  std::function<void()> consultation_probe;
};

// A mechanism with a monitor woven in: every method entry point consults
// the automaton, and no code path reaches a pipeline without an Allow.
struct SecuredMechanism {
  MechanismModule mechanism;
  std::shared_ptr<const SecurityAutomaton> automaton;
  std::string policy_hash;  // binds the woven pair for cache identity
};

// Throws ScopeMismatch when an interface-scoped policy is woven into a
// mechanism implementing a different interface.
SecuredMechanism weave(MechanismModule mechanism,
                       std::shared_ptr<const SecurityAutomaton> automaton);

struct InvokeOutcome {
  std::variant<DisseminationResult, PolicyViolation> result;
  AutomatonState next_state;

  bool allowed() const { return std::holds_alternative<DisseminationResult>(result); }
  const DisseminationResult& dissemination() const {
    return std::get<DisseminationResult>(result);
  }
  const PolicyViolation& violation() const { return std::get<PolicyViolation>(result); }
};

// Check-before-execute. On Halt: a PolicyViolation, the input state
// unchanged, and zero slot resolutions. On Allow: the pipeline result and
// the state the automaton moved to. Throws UnknownMethod; a resolution
// failure after an Allow throws PipelineFailure (a fault, not a denial).
InvokeOutcome invoke(const SecuredMechanism& sm, const std::string& method,
                     const std::map<std::string, Literal>& args, const InvocationContext& ctx);

// The unmediated baseline the woven unit must be transparent against.
DisseminationResult execute_raw(const MechanismModule& mechanism, const std::string& method,
                                const std::map<std::string, Literal>& args,
                                const SlotResolver& resolver);

}  // namespace pcpe
