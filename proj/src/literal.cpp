#include "pcpe/literal.hpp"

namespace pcpe {

const char* value_type_name(ValueType t) {
  switch (t) {
    case ValueType::Bool:
      return "bool";
    case ValueType::Int:
      return "int";
    case ValueType::String:
      return "string";
  }
  return "?";
}

ValueType Literal::type() const {
  if (std::holds_alternative<bool>(v_)) return ValueType::Bool;
  if (std::holds_alternative<std::int64_t>(v_)) return ValueType::Int;
  return ValueType::String;
}

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string Literal::render() const {
  switch (type()) {
    case ValueType::Bool:
      return as_bool() ? "true" : "false";
    case ValueType::Int:
      return std::to_string(as_int());
    case ValueType::String:
      return quote_string(as_string());
  }
  return {};
}

}  // namespace pcpe
