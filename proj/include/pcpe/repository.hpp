#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pcpe/automaton.hpp"
#include "pcpe/mechanism.hpp"
#include "pcpe/object_model.hpp"
#include "pcpe/policy.hpp"

namespace pcpe {

// The generic API methods common to all objects. Default-scoped policies
// are validated against these names. GetDissemination is the generic
// entry point through which content-specific methods are invoked.
const std::vector<std::string>& primitive_method_names();

inline constexpr const char* kPackageFormatVersion = "1";

struct RepositoryOptions {
  // Overrides the persisted violation mode when set.
  std::optional<ViolationMode> violation_mode;
  // Resolves url: locators; obj: locators are resolved internally.
  // Unset means external references fail with ResolutionFailure.
  LocatorResolver external_resolver;
};

struct RepositoryStats {
  std::size_t policy_compiles = 0;
  std::size_t weaves = 0;
  std::size_t weave_cache_hits = 0;
};

// Per-session enforcement state, persisted between requests. Automaton
// states are keyed per (object, scope) so that state never leaks across
// sessions, objects, or scopes. Scope keys: "default" for the generic
// API automaton, "dissem/<id>" for a disseminator's policy automaton.
struct Session {
  std::string id;
  std::map<std::string, std::map<std::string, AutomatonState>> states;  // object -> scope -> state
  std::map<std::string, std::set<std::string>> killed;                  // object -> killed scopes
};

std::string disseminator_scope_key(const std::string& dissem_id);

// General-purpose management layer: stores objects, owns policy scoping
// (default / group / inline), weaves mechanisms with their policies
// just-in-time with caching, persists per-session automaton states, and
// handles portable export/import.
//
// Storage is one canonical-JSON (or policy-text) file per entity under
// the root, atomically replaced on write. Concurrency contract: public
// operations are internally serialized; per-session ordering therefore
// holds for any caller.
class Repository {
 public:
  explicit Repository(std::filesystem::path root, RepositoryOptions opts = {});

  const std::filesystem::path& root() const { return root_; }

  ViolationMode violation_mode() const;
  void set_violation_mode(ViolationMode m);

  // --- registry ---
  void register_interface(const BehaviorInterface& iface);
  void register_mechanism(const MechanismModule& mech);
  BehaviorInterface get_interface(const std::string& id) const;
  MechanismModule get_mechanism(const std::string& id) const;

  // --- policies ---
  void set_default_policy(const std::string& policy_text);
  std::optional<std::string> default_policy_text() const;
  void register_group_policy(const std::string& group_id, const std::string& policy_text);
  std::string group_policy_text(const std::string& group_id) const;
  void attach_policy(const std::string& object_id, const std::string& dissem_id,
                     const PolicyBinding& binding);

  // --- objects ---
  std::string ingest(const DigitalObject& obj);
  DigitalObject get_object(const std::string& object_id) const;
  bool has_object(const std::string& object_id) const;

  // --- access ---
  using AccessResult = std::variant<DisseminationResult, PolicyViolation>;

  // The mediated path: the default-policy automaton gates the generic
  // GetDissemination event, then the disseminator's woven mechanism runs
  // the content method. Both must allow (conjunctive); session states
  // commit atomically only when the invocation succeeds.
  AccessResult disseminate(const std::string& object_id, const std::string& dissem_id,
                           const std::string& method, const std::map<std::string, Literal>& args,
                           const Principal& principal, const std::string& session_id);

  using PrimitiveResult = std::variant<json, PolicyViolation>;

  // Generic API: GetObjectProfile, ListDisseminators, ListMethods read;
  // AddDataStream, DeleteDataStream, AddDisseminator, DeleteDisseminator
  // mutate (args carry the payload, see README). Every call is gated by
  // the default policy.
  PrimitiveResult invoke_primitive(const std::string& object_id, const std::string& method,
                                   const json& args, const Principal& principal,
                                   const std::string& session_id);

  // --- portability ---
  // Self-sufficient package: the object with group policies embedded as
  // inline policy datastreams, the registry entries it needs, and a
  // digest over the canonical bytes. Returns the exact package bytes.
  Bytes export_object(const std::string& object_id) const;
  // Verifies canonical form and digest (TamperDetected on any deviation),
  // checks the format version, re-validates policies and registry
  // entries, then ingests. Returns the imported object id.
  std::string import_object(const Bytes& package_bytes);

  // --- sessions ---
  json session_snapshot(const std::string& session_id) const;

  RepositoryStats stats() const;

 private:
  struct PolicyEntry {
    std::shared_ptr<const SecurityAutomaton> automaton;
    PolicyAst ast;
  };

  std::filesystem::path object_path(const std::string& id) const;
  std::filesystem::path session_path(const std::string& id) const;

  DigitalObject load_object(const std::string& id) const;
  void store_object(const DigitalObject& obj) const;
  Session load_session(const std::string& id) const;
  void store_session(const Session& s) const;

  PolicyEntry compiled_policy(const std::string& policy_text) const;
  std::shared_ptr<const SecuredMechanism> secured_mechanism(const MechanismModule& mech,
                                                            const PolicyEntry& policy) const;
  void evict_mechanism(const std::string& mechanism_id) const;
  void evict_weave(const std::string& mechanism_id, const std::string& policy_hash) const;

  // Resolves a policy binding to its text and validates it against the
  // disseminator's interface. Throws InvalidPolicyBinding.
  std::string binding_policy_text(const DigitalObject& obj, const Disseminator& dissem,
                                  const PolicyBinding& binding) const;

  AutomatonState scope_state(const Session& session, const std::string& object_id,
                             const std::string& scope_key, const SecurityAutomaton& a) const;

  AccessResult disseminate_impl(const std::string& object_id, const std::string& dissem_id,
                                const std::string& method,
                                const std::map<std::string, Literal>& args,
                                const Principal& principal, Session& session, int depth,
                                std::map<std::pair<std::string, std::string>, AutomatonState>&
                                    pending_states);

  Bytes resolve_locator(const Locator& loc, const Principal& principal, Session& session,
                        int depth,
                        std::map<std::pair<std::string, std::string>, AutomatonState>&
                            pending_states);

  std::filesystem::path root_;
  LocatorResolver external_resolver_;
  mutable std::mutex mu_;
  mutable std::map<std::string, PolicyEntry> policy_cache_;  // raw-text hash -> entry
  mutable std::map<std::pair<std::string, std::string>, std::shared_ptr<const SecuredMechanism>>
      weave_cache_;  // (mechanism id, policy hash) -> woven unit
  mutable RepositoryStats stats_;
  ViolationMode mode_ = ViolationMode::DenyRequest;
};

}  // namespace pcpe
