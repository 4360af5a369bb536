#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcpe/bytes.hpp"
#include "pcpe/literal.hpp"

namespace pcpe {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// Where the bytes of a reference datastream live: another object's
// dissemination inside this repository, or an external URL.
struct ObjectLocator {
  std::string object_id;
  std::string interface_id;
  std::string method;

  friend bool operator==(const ObjectLocator&, const ObjectLocator&) = default;
};

struct UrlLocator {
  std::string url;

  friend bool operator==(const UrlLocator&, const UrlLocator&) = default;
};

using Locator = std::variant<ObjectLocator, UrlLocator>;

// "obj:<object-id>/<interface-id>/<method>" or "url:<string>".
std::string locator_to_string(const Locator& loc);
Locator locator_from_string(const std::string& s);

// A mime-typed content element: payload stored inline or by reference.
struct DataStream {
  std::string id;
  std::string mime_type;
  std::variant<Bytes, Locator> content;  // exactly one of inline / reference

  bool is_inline() const { return std::holds_alternative<Bytes>(content); }
  const Bytes& inline_payload() const { return std::get<Bytes>(content); }
  const Locator& reference() const { return std::get<Locator>(content); }

  static DataStream make_inline(std::string id, std::string mime, Bytes payload);
  static DataStream make_reference(std::string id, std::string mime, Locator loc);

  friend bool operator==(const DataStream&, const DataStream&) = default;
};

struct MethodParam {
  std::string name;
  ValueType type = ValueType::String;  // int or string

  friend bool operator==(const MethodParam&, const MethodParam&) = default;
};

struct MethodSignature {
  std::string name;
  std::vector<MethodParam> params;
  std::string returns_mime_type;

  const MethodParam* find_param(const std::string& n) const;

  friend bool operator==(const MethodSignature&, const MethodSignature&) = default;
};

// A formally defined behavior contract: the methods a disseminator exposes.
struct BehaviorInterface {
  std::string id;
  std::vector<MethodSignature> methods;

  const MethodSignature* find_method(const std::string& name) const;

  friend bool operator==(const BehaviorInterface&, const BehaviorInterface&) = default;
};

// Plugs content-specific behavior into an object: an interface, the
// mechanism that implements it, and the slot -> datastream wiring the
// mechanism consumes.
struct Disseminator {
  std::string id;
  std::string interface_id;
  std::string mechanism_id;
  std::map<std::string, std::string> binding;  // slot name -> datastream id

  friend bool operator==(const Disseminator&, const Disseminator&) = default;
};

// How a policy is associated with a disseminator: carried inside the
// object as a datastream of policy text, or registered in the repository
// and referenced by group id.
struct InlinePolicy {
  std::string ds_id;

  friend bool operator==(const InlinePolicy&, const InlinePolicy&) = default;
};

struct GroupPolicy {
  std::string group_id;

  friend bool operator==(const GroupPolicy&, const GroupPolicy&) = default;
};

using PolicyBinding = std::variant<InlinePolicy, GroupPolicy>;

// The unit of storage, access and portability: datastreams plus
// disseminators plus the policies that govern them.
struct DigitalObject {
  std::string id;
  std::string label;
  std::map<std::string, DataStream> datastreams;       // keyed by id
  std::vector<Disseminator> disseminators;             // in declaration order
  std::map<std::string, PolicyBinding> policy_bindings;  // disseminator id -> binding

  const DataStream* find_datastream(const std::string& ds_id) const;
  const Disseminator* find_disseminator(const std::string& d_id) const;

  friend bool operator==(const DigitalObject&, const DigitalObject&) = default;
};

// Throws DuplicateId / DanglingBinding. Every returned object satisfies
// the structural invariants (unique ids, bindings resolve, at most one
// policy binding per disseminator and only for present disseminators).
DigitalObject build_object(std::string id, std::vector<DataStream> datastreams,
                           std::vector<Disseminator> disseminators, std::string label,
                           std::map<std::string, PolicyBinding> policy_bindings = {});

// Re-checks the invariants build_object establishes; throws on violation.
void validate_object(const DigitalObject& obj);

// Produces the bytes behind a reference locator.
using LocatorResolver = std::function<Bytes(const Locator&)>;

// Inline streams return their payload verbatim; reference streams return
// resolver(locator). Throws UnknownDataStream / ResolutionFailure.
Bytes resolve_datastream(const DigitalObject& obj, const std::string& ds_id,
                         const LocatorResolver& resolver);

struct DisseminatorInfo {
  std::string id;
  std::string interface_id;
  std::vector<MethodSignature> methods;

  friend bool operator==(const DisseminatorInfo&, const DisseminatorInfo&) = default;
};

using InterfaceLookup = std::function<const BehaviorInterface*(const std::string&)>;

// One descriptor per disseminator, in object order, with full signatures
// so a client can construct invocations without prior knowledge.
std::vector<DisseminatorInfo> list_disseminators(const DigitalObject& obj,
                                                 const InterfaceLookup& interfaces);

// Primitive mutations of object contents. Policy mediation happens in the
// repository; these are the unmediated state transitions.
struct AddDataStream {
  DataStream ds;
};
struct DeleteDataStream {
  std::string ds_id;
};
struct AddDisseminator {
  Disseminator d;
};
struct DeleteDisseminator {
  std::string d_id;
};
using PrimitiveMutation =
    std::variant<AddDataStream, DeleteDataStream, AddDisseminator, DeleteDisseminator>;

// Returns a new object value with the mutation applied and revalidated;
// the input is never changed. Deleting a datastream still bound by a
// disseminator is rejected (BindingWouldDangle). Deleting a disseminator
// also drops its policy binding. Throws UnknownTarget / DuplicateId /
// BindingWouldDangle / DanglingBinding.
DigitalObject apply_primitive_mutation(const DigitalObject& obj, const PrimitiveMutation& op);

// Canonical JSON object form. Field order is fixed, map keys are sorted,
// output is byte-deterministic: it is the digest input for export packages.
ojson object_to_json(const DigitalObject& obj);
DigitalObject object_from_json(const json& j);
Bytes object_canonical_bytes(const DigitalObject& obj);

ojson interface_to_json(const BehaviorInterface& iface);
BehaviorInterface interface_from_json(const json& j);

}  // namespace pcpe
