#pragma once

#include <span>

#include "pcpe/automaton.hpp"
#include "pcpe/policy.hpp"

namespace pcpe {

// Reference semantics for policies, interpreted directly off the AST.
// Deliberately shares no evaluation code with compile/step: it exists to
// check them, and a shared helper would hide a shared bug.

AutomatonState oracle_initial_state(const PolicyAst& ast);

Decision oracle_step(const PolicyAst& ast, const AutomatonState& s, const Event& e);

TraceResult oracle_eval(const PolicyAst& ast, std::span<const Event> events,
                        ViolationMode mode = ViolationMode::DenyRequest);

}  // namespace pcpe
