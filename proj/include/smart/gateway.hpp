/*
 * Copyright 2026 The smartmash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SMART_GATEWAY_HPP_
#define SMART_GATEWAY_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "smart/executor.hpp"
#include "smart/query.hpp"
#include "smart/service_model.hpp"
#include "smart/transport.hpp"

namespace smart {

using Json = nlohmann::ordered_json;

struct ApiResponse {
  int status = 200;
  Json body;
};

/// Immutable view shared by concurrent requests.
struct Snapshot {
  /// Ontology triples as authored, without axioms or inferred facts.
  std::shared_ptr<const Graph> base;
  std::shared_ptr<const Graph> saturated;
  ServiceRegistry registry;
  std::vector<ValidationReport> reports;
};

struct GatewayOptions {
  /// Registration writes the merged ontology here when set.
  std::optional<std::string> ontologyPath;
  /// Endpoint prefix substitution applied to every descriptor, e.g. the
  /// fixture base URL to the port a test server actually bound.
  std::optional<std::pair<std::string, std::string>> endpointRewrite;
  int timeoutMs = 10000;
};

/// JSON renderings shared by the HTTP API, the CLI and the Python module.
Json toJson(const FormSpec& spec);
Json toJson(const ValidationReport& report);
Json toJson(const ServiceDescriptor& d);
Json planToJson(const QueryPlan& plan, const Graph& graph);
Json executeResponse(const ResultGraph& result, const Graph& graph);
Json errorBody(const Error& e);
/// HTTP status for an engine error code.
int statusFor(const std::string& code);

/// Resolves binding keys given as full IRIs or ":local" names.
Iri bindingKey(const std::string& key);

class Gateway {
 public:
  /// Parses, saturates and extracts the registry. Throws ParseError.
  Gateway(std::string_view turtle, std::shared_ptr<Transport> transport,
          GatewayOptions options = {});

  ApiResponse analyze(const std::string& query) const;
  ApiResponse execute(const std::string& query,
                      const std::map<std::string, std::string>& bindings);
  ApiResponse registerTurtle(const std::string& body);
  ApiResponse services() const;
  ApiResponse health() const;

  /// Dispatches a JSON request body for the POST endpoints.
  ApiResponse analyzeJson(const std::string& body) const;
  ApiResponse executeJson(const std::string& body);

  std::shared_ptr<const Snapshot> snapshot() const;

 private:
  std::shared_ptr<const Snapshot> buildSnapshot(
      std::shared_ptr<const Graph> base) const;

  std::shared_ptr<Transport> transport_;
  GatewayOptions options_;
  mutable std::mutex snapshotMu_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::mutex writerMu_;
  std::atomic<std::uint64_t> requestCounter_{0};
};

/// Serves the HTTP API (and optionally static files) until stop().
class HttpServer {
 public:
  HttpServer(Gateway& gateway, std::optional<std::string> staticDir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves in a background thread; port 0 picks a free port.
  /// Throws Error("PortInUse").
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread.
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace smart

#endif  // SMART_GATEWAY_HPP_
