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

#ifndef SMART_FIXTURES_HPP_
#define SMART_FIXTURES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smart::fixtures {

inline constexpr int kPort = 7341;
/// Endpoint prefix used by the fixture ontology.
inline constexpr std::string_view kBaseUrl = "http://127.0.0.1:7341/";

struct GeoRecord {
  std::string name;
  std::string countryName;
  std::string countryCode;
  std::string lat;
  std::string lng;
};

struct Measurement {
  std::string provider;
  std::string lat;
  std::string lng;
  std::string strengthDbm;
};

struct Subscriber {
  std::string name;
  std::string phone;
  std::string city;
};

const std::vector<GeoRecord>& geoRecords();
/// MSISDN prefix (first two digits) to provider name.
const std::map<std::string, std::string>& operatorMap();
/// Embedded CSV with a header line: provider,lat,lng,strengthDbm.
std::string_view measurementsCsv();
std::vector<Measurement> measurements();
const std::vector<Subscriber>& subscribers();

/// Fixture ontology text (services.ttl) and the standalone GetOperator
/// descriptor (get_operator.ttl).
std::string_view servicesTurtle();
std::string_view getOperatorTurtle();

/// Response bodies, as served. nullopt maps to HTTP 404.
std::string geoSearchXml(std::string_view query);
std::optional<std::string> operatorXml(std::string_view msisdn);
std::string signalXml(std::string_view provider);
std::string reverseLookupJson(std::string_view phone);

/// Local HTTP server for the four fixture services. Port 0 picks a free
/// port. Throws Error("PortInUse").
class FixtureServer {
 public:
  explicit FixtureServer(int port = kPort);
  ~FixtureServer();
  FixtureServer(const FixtureServer&) = delete;
  FixtureServer& operator=(const FixtureServer&) = delete;

  int port() const noexcept { return port_; }
  /// "http://127.0.0.1:{port}/".
  std::string baseUrl() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace smart::fixtures

#endif  // SMART_FIXTURES_HPP_
