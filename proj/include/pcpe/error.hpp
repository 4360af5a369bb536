#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pcpe {

// Fault categories shared by the library, the CLI and the wire service.
// A fault is thrown; a policy denial is never a fault (see mechanism.hpp).
namespace errkind {
inline constexpr const char* duplicate_id = "DuplicateId";
inline constexpr const char* dangling_binding = "DanglingBinding";
inline constexpr const char* binding_would_dangle = "BindingWouldDangle";
inline constexpr const char* unknown_target = "UnknownTarget";
inline constexpr const char* unknown_datastream = "UnknownDataStream";
inline constexpr const char* resolution_failure = "ResolutionFailure";
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* compile_error = "CompileError";
inline constexpr const char* state_schema_mismatch = "StateSchemaMismatch";
inline constexpr const char* scope_mismatch = "ScopeMismatch";
inline constexpr const char* unknown_method = "UnknownMethod";
inline constexpr const char* pipeline_failure = "PipelineFailure";
inline constexpr const char* invalid_mechanism = "InvalidMechanism";
inline constexpr const char* duplicate_object = "DuplicateObject";
inline constexpr const char* unknown_object = "UnknownObject";
inline constexpr const char* unknown_disseminator = "UnknownDisseminator";
inline constexpr const char* unknown_interface = "UnknownInterface";
inline constexpr const char* unknown_mechanism = "UnknownMechanism";
inline constexpr const char* unknown_group = "UnknownGroup";
inline constexpr const char* unknown_session = "UnknownSession";
inline constexpr const char* invalid_policy = "InvalidPolicy";
inline constexpr const char* invalid_policy_binding = "InvalidPolicyBinding";
inline constexpr const char* invalid_id = "InvalidId";
inline constexpr const char* argument_mismatch = "ArgumentMismatch";
inline constexpr const char* tamper_detected = "TamperDetected";
inline constexpr const char* unsupported_version = "UnsupportedVersion";
inline constexpr const char* registry_conflict = "RegistryConflict";
inline constexpr const char* bad_request = "BadRequest";
inline constexpr const char* io_error = "IoError";
}  // namespace errkind

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, std::string detail = {})
      : std::runtime_error(message), kind_(std::move(kind)), detail_(std::move(detail)) {}

  const std::string& kind() const noexcept { return kind_; }
  // Optional machine-readable payload (e.g. rendered diagnostics, a locator).
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

}  // namespace pcpe
