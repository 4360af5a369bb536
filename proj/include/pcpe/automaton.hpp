#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcpe/bytes.hpp"
#include "pcpe/literal.hpp"
#include "pcpe/policy.hpp"

namespace pcpe {

// One invocation as the policy engine sees it: the automaton's alphabet.
struct Event {
  std::string method;
  std::map<std::string, Literal> args;
  Principal principal;

  friend bool operator==(const Event&, const Event&) = default;
};

// A state of the security automaton: a valuation of the policy's declared
// state variables. Immutable value; stepping produces new states.
struct AutomatonState {
  std::map<std::string, Literal> valuation;

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

struct HaltInfo {
  std::size_t handler_index = 0;  // position in the policy's handler list
  std::string policy_name;
  std::string rendered_guard;  // pattern + failing require expression
  SourcePos pos;
};

// Outcome of feeding one event to the automaton. A Halt never carries a
// state change.
struct Decision {
  enum class Kind { Allow, Halt };
  Kind kind = Kind::Allow;
  AutomatonState next;  // Allow only
  HaltInfo halt;        // Halt only

  bool allowed() const { return kind == Kind::Allow; }

  static Decision allow(AutomatonState next);
  static Decision halted(HaltInfo info);
};

// Equality used by differential tests: kind, resulting state, and which
// handler denied. Rendered messages are not compared.
bool same_decision(const Decision& a, const Decision& b);

// What a denial does to the rest of the run. DenyRequest refuses the one
// invocation and the run continues with unchanged state; KillSession is
// strict truncation: the run stops at the first denial.
enum class ViolationMode { DenyRequest, KillSession };

ViolationMode violation_mode_from_string(const std::string& s);
const char* violation_mode_to_string(ViolationMode m);

// Single compiled guard or assignment program: a small postfix
// instruction sequence evaluated over a value stack.
struct Instr {
  enum class Op {
    PushLiteral,  // push literal
    PushVar,      // push state variable `name`
    HasCred,      // push principal.has_credential(name)
    Receipt,      // push "any receipt `name` with amount cmp cents"
    CmpArg,       // push arg(name) cmp literal; traps if arg missing
    CmpVar,       // push var(name) cmp literal
    And,
    Or,
    Not,
  };
  Op op;
  std::string name;
  Literal literal;
  CmpOp cmp = CmpOp::Eq;
  std::int64_t cents = 0;
};

struct CompiledAssign {
  std::string var;
  std::vector<Instr> program;
};

struct CompiledHandler {
  std::size_t handler_index = 0;
  HandlerPhase phase = HandlerPhase::Before;
  EventPattern pattern;
  std::vector<Instr> guard;              // Before
  std::vector<CompiledAssign> updates;   // After
  std::string rendered;                  // for denial messages
  SourcePos pos;
};

// A policy compiled to guard/update tables plus its initial state. The
// compiled form is immutable and safe to share across threads.
struct SecurityAutomaton {
  std::string policy_name;
  PolicyScope scope;
  std::string canonical_text;  // pretty-printed policy source
  std::string policy_hash;     // sha256 of canonical_text
  std::map<std::string, ValueType> state_schema;
  AutomatonState initial;
  std::vector<CompiledHandler> handlers;
};

// Requires an AST that passed validate_policy with no diagnostics;
// throws CompileError if fed anything else.
SecurityAutomaton compile(const PolicyAst& ast);

// Evaluates matching before-guards in declaration order; the first false
// guard halts with no state change. If all pass, matching after-updates
// run in order and the decision carries the new state. Evaluation is
// total: a guard that references a missing argument (or compares
// mismatched types) evaluates to false rather than erroring.
Decision step(const SecurityAutomaton& a, const AutomatonState& s, const Event& e);

struct TraceResult {
  std::vector<Decision> decisions;
  AutomatonState final_state;
  // Set only under KillSession (strict truncation): index of the denial
  // that stopped the run.
  std::optional<std::size_t> halted_at;

  bool fully_allowed() const;
};

bool same_trace_result(const TraceResult& a, const TraceResult& b);

TraceResult run_trace(const SecurityAutomaton& a, std::span<const Event> events,
                      ViolationMode mode = ViolationMode::DenyRequest);

// Canonical JSON map varName -> {"t": type, "v": value}, keys sorted.
Bytes serialize_state(const AutomatonState& s);
// Validates variable names and types against the automaton's schema;
// throws StateSchemaMismatch when the bytes don't fit it exactly.
AutomatonState deserialize_state(const Bytes& bytes, const SecurityAutomaton& a);

}  // namespace pcpe
