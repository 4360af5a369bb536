#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcpe/error.hpp"
#include "pcpe/literal.hpp"
#include "pcpe/object_model.hpp"

namespace pcpe {

struct SourcePos {
  int line = 0;  // 1-based
  int col = 0;   // 1-based

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_op_text(CmpOp op);

// Expression tree for guards and assignment right-hand sides.
//
// Value semantics throughout: nodes own their children, ASTs copy freely.
// Structural equality ignores source positions.
struct Expr {
  enum class Kind {
    Or,          // children[0] || children[1]
    And,         // children[0] && children[1]
    Not,         // !children[0]
    BoolConst,   // bval
    Credential,  // credential(name)
    Receipt,     // receipt(name, cmp amount_cents)
    ArgCompare,  // arg(name) cmp literal
    VarRef,      // name
    VarCompare,  // name cmp literal
  };

  Kind kind = Kind::BoolConst;
  SourcePos pos;
  std::string name;                 // credential/receipt/arg/var name
  CmpOp cmp = CmpOp::Eq;            // Receipt, ArgCompare, VarCompare
  Literal literal;                  // ArgCompare, VarCompare right-hand side
  std::int64_t amount_cents = 0;    // Receipt
  bool bval = false;                // BoolConst
  std::vector<Expr> children;

  static Expr bool_const(bool b);
  static Expr credential(std::string name);
  static Expr receipt(std::string name, CmpOp cmp, std::int64_t cents);
  static Expr arg_compare(std::string arg, CmpOp cmp, Literal rhs);
  static Expr var_ref(std::string var);
  static Expr var_compare(std::string var, CmpOp cmp, Literal rhs);
  static Expr negation(Expr e);
  static Expr conjunction(Expr l, Expr r);
  static Expr disjunction(Expr l, Expr r);
};

bool structurally_equal(const Expr& a, const Expr& b);

// Which invocations a handler fires on.
struct EventPattern {
  enum class Kind { Wildcard, Exact, OneOf };
  Kind kind = Kind::Wildcard;
  std::vector<std::string> methods;  // Exact: one entry; OneOf: as written
  SourcePos pos;

  bool matches(const std::string& method) const;
};

struct StateDecl {
  std::string name;
  ValueType type = ValueType::Bool;
  Literal initial;
  SourcePos pos;
};

struct Assignment {
  std::string var;
  Expr value;
  SourcePos pos;
};

enum class HandlerPhase { Before, After };

struct Handler {
  HandlerPhase phase = HandlerPhase::Before;
  EventPattern pattern;
  Expr require_expr;                   // Before only
  std::vector<Assignment> assignments;  // After only
  SourcePos pos;
};

struct PolicyScope {
  enum class Kind { Default, Interface };
  Kind kind = Kind::Default;
  std::string interface_id;  // Interface only

  friend bool operator==(const PolicyScope&, const PolicyScope&) = default;
};

// Parsed policy: declared state plus an ordered handler list. Handler
// order is evaluation order and is preserved from the source text.
struct PolicyAst {
  std::string name;
  PolicyScope scope;
  std::vector<StateDecl> state_decls;
  std::vector<Handler> handlers;
  SourcePos pos;

  const StateDecl* find_state(const std::string& var) const;
};

bool structurally_equal(const PolicyAst& a, const PolicyAst& b);

// Thrown by parse_policy. Carries the failure position and the token
// classes that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::string got, std::vector<std::string> expected);

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

// Policy text -> AST. Every node carries its source position.
PolicyAst parse_policy(const std::string& text);

struct Diagnostic {
  std::string code;  // UnknownMethod, TypeMismatch, UnknownVariable, ...
  std::string message;
  SourcePos pos;
};

std::string render_diagnostics(const std::vector<Diagnostic>& diags);

// Static checks beyond the grammar: pattern methods resolve (against the
// interface for interface-scoped policies, against known_primitives
// otherwise), expressions type-check, variables are declared and unique.
// Empty result means the policy is valid for its scope.
std::vector<Diagnostic> validate_policy(const PolicyAst& ast, const BehaviorInterface* iface,
                                        const std::vector<std::string>& known_primitives);

// Canonical source form: comments stripped, fixed layout. Re-parsing the
// output yields a structurally equal AST. This text is the policy digest
// input, so formatting differences never change a policy's identity.
std::string pretty_print(const PolicyAst& ast);

std::string render_expr(const Expr& e);
std::string render_pattern(const EventPattern& p);

}  // namespace pcpe
