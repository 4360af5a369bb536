#pragma once

#include <functional>
#include <memory>
#include <string>

#include "pcpe/repository.hpp"

namespace pcpe {

// Request/response dispatch for the JSON wire protocol. Requests:
//   {op, params, principal: {name, credentials: [...],
//    receipts: [{name, amountCents}]}, sessionId}
// Responses:
//   {ok: true, result: {...}} or
//   {ok: false, error: {kind, message, detail?}}
// Malformed requests always produce ok:false with kind BadRequest;
// denials use kind PolicyViolation and echo the halt reason.
json wire_dispatch(Repository& repo, const json& request);

Principal principal_from_json(const json& j);
ojson principal_to_json(const Principal& p);

// HTTP transport: POST /api with one request document per call.
class WireServer {
 public:
  explicit WireServer(Repository& repo);
  ~WireServer();

  // Blocks until stop(). Port 0 picks a free port; on_bound receives the
  // actual one before serving starts. Returns false on bind failure.
  bool listen(const std::string& host, int port, std::function<void(int)> on_bound = {});
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pcpe
