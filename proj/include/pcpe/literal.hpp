#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pcpe {

enum class ValueType { Bool, Int, String };

const char* value_type_name(ValueType t);

// A typed policy value: state variables, event arguments, literals.
class Literal {
 public:
  Literal() : v_(false) {}
  static Literal boolean(bool b) { return Literal(Rep(b)); }
  static Literal integer(std::int64_t i) { return Literal(Rep(i)); }
  static Literal string(std::string s) { return Literal(Rep(std::move(s))); }

  ValueType type() const;
  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }

  // Source-form rendering: true/false, decimal, double-quoted string.
  std::string render() const;

  friend bool operator==(const Literal& a, const Literal& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }

 private:
  using Rep = std::variant<bool, std::int64_t, std::string>;
  explicit Literal(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

struct Receipt {
  std::string name;
  std::int64_t amount_cents = 0;

  friend bool operator==(const Receipt&, const Receipt&) = default;
};

// Caller-asserted identity: a credential set plus payment receipts.
// Verification of the assertions is outside this system.
struct Principal {
  std::string name;
  std::set<std::string> credentials;
  std::vector<Receipt> receipts;

  bool has_credential(const std::string& c) const { return credentials.count(c) != 0; }

  friend bool operator==(const Principal&, const Principal&) = default;
};

// Escapes per the policy language's string syntax (backslash escapes).
std::string quote_string(const std::string& s);

}  // namespace pcpe
