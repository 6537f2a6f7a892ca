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

#include "smart/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "smart/embedded_get_operator.hpp"
#include "smart/embedded_services.hpp"
#include "smart/errors.hpp"
#include "smart/xml.hpp"

namespace smart::fixtures {

namespace {

constexpr std::string_view kMeasurements =
    "provider,lat,lng,strengthDbm\n"
    "Alfa,33.89320,35.50180,-67\n"
    "Alfa,34.12111,35.64806,-81\n"
    "Alfa,34.43667,35.84972,-74\n"
    "Touch,33.88894,35.49442,-59\n"
    "Touch,34.12000,35.65100,-88\n"
    "Touch,34.43500,35.84000,-70\n";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

XmlNode leaf(std::string name, std::string text) {
  XmlNode n;
  n.name = std::move(name);
  n.text = std::move(text);
  return n;
}

}  // namespace

const std::vector<GeoRecord>& geoRecords() {
  static const std::vector<GeoRecord> records = {
      {"beirut", "Lebanon", "LB", "33.88894", "35.49442"},
      {"byblos", "Lebanon", "LB", "34.12111", "35.64806"},
      {"tripoli", "Lebanon", "LB", "34.43667", "35.84972"},
  };
  return records;
}

const std::map<std::string, std::string>& operatorMap() {
  static const std::map<std::string, std::string> map = {
      {"03", "Alfa"}, {"70", "Touch"}};
  return map;
}

std::string_view measurementsCsv() { return kMeasurements; }

std::vector<Measurement> measurements() {
  std::vector<Measurement> out;
  std::istringstream in{std::string(kMeasurements)};
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) continue;
    out.push_back({cells[0], cells[1], cells[2], cells[3]});
  }
  return out;
}

const std::vector<Subscriber>& subscribers() {
  static const std::vector<Subscriber> list = {
      {"Rami Haddad", "03123456", "Beirut"},
      {"Lina Khoury", "70987654", "Byblos"},
  };
  return list;
}

std::string_view servicesTurtle() { return embedded::kServicesTtl; }
std::string_view getOperatorTurtle() { return embedded::kGetOperatorTtl; }

// Records whose name matches, followed by the rest of their countries.
std::string geoSearchXml(std::string_view query) {
  const std::string q = lower(query);
  std::vector<const GeoRecord*> hits;
  std::vector<std::string> countries;
  for (const auto& r : geoRecords()) {
    if (lower(r.name) == q) {
      hits.push_back(&r);
      countries.push_back(r.countryCode);
    }
  }
  for (const auto& r : geoRecords()) {
    if (std::find(hits.begin(), hits.end(), &r) != hits.end()) continue;
    if (std::find(countries.begin(), countries.end(), r.countryCode) != countries.end())
      hits.push_back(&r);
  }
  XmlNode root;
  root.name = "geonames";
  for (const GeoRecord* r : hits) {
    XmlNode g;
    g.name = "geoname";
    g.children.push_back(leaf("name", r->name));
    g.children.push_back(leaf("countryName", r->countryName));
    g.children.push_back(leaf("countryCode", r->countryCode));
    g.children.push_back(leaf("lat", r->lat));
    g.children.push_back(leaf("lng", r->lng));
    root.children.push_back(std::move(g));
  }
  return toXmlString(root);
}

std::optional<std::string> operatorXml(std::string_view msisdn) {
  if (msisdn.size() < 2) return std::nullopt;
  auto it = operatorMap().find(std::string(msisdn.substr(0, 2)));
  if (it == operatorMap().end()) return std::nullopt;
  return toXmlString(leaf("Operator", it->second));
}

std::string signalXml(std::string_view provider) {
  const std::string p = lower(provider);
  XmlNode root;
  root.name = "measurements";
  for (const auto& m : measurements()) {
    if (lower(m.provider) != p) continue;
    XmlNode n;
    n.name = "measurement";
    n.children.push_back(leaf("provider", m.provider));
    n.children.push_back(leaf("lat", m.lat));
    n.children.push_back(leaf("lng", m.lng));
    n.children.push_back(leaf("strength", m.strengthDbm));
    root.children.push_back(std::move(n));
  }
  return toXmlString(root);
}

std::string reverseLookupJson(std::string_view phone) {
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (const auto& s : subscribers()) {
    if (s.phone != phone) continue;
    data.push_back({{"name", s.name}, {"phone", s.phone}, {"city", s.city}});
  }
  return nlohmann::ordered_json{{"data", data}}.dump();
}

struct FixtureServer::Impl {
  httplib::Server server;
  std::thread thread;
};

namespace {

void missing(httplib::Response& res, const char* param) {
  res.status = 400;
  res.set_content(std::string("missing parameter ") + param, "text/plain");
}

}  // namespace

FixtureServer::FixtureServer(int port) : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  // httplib also sets SO_REUSEPORT, which would let a second server share a
  // bound port; keep only SO_REUSEADDR so PortInUse is detected.
  s.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  s.Get("/geoSearch", [](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("q")) return missing(res, "q");
    res.set_content(geoSearchXml(req.get_param_value("q")), "application/xml");
  });
  s.Get("/getOperator", [](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("n")) return missing(res, "n");
    auto body = operatorXml(req.get_param_value("n"));
    if (!body) {
      res.status = 404;
      res.set_content("unknown prefix", "text/plain");
      return;
    }
    res.set_content(*body, "application/xml");
  });
  s.Get("/signal", [](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("provider")) return missing(res, "provider");
    res.set_content(signalXml(req.get_param_value("provider")), "application/xml");
  });
  s.Get("/reverseLookup", [](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("phone")) return missing(res, "phone");
    res.set_content(reverseLookupJson(req.get_param_value("phone")),
                    "application/json");
  });

  if (port == 0) {
    port_ = s.bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw Error("PortInUse", "no free port for the fixture server");
  } else {
    if (!s.bind_to_port("127.0.0.1", port))
      throw Error("PortInUse",
                  "fixture port " + std::to_string(port) + " is in use",
                  {{"port", std::to_string(port)}});
    port_ = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

FixtureServer::~FixtureServer() { stop(); }

void FixtureServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string FixtureServer::baseUrl() const {
  return "http://127.0.0.1:" + std::to_string(port_) + "/";
}

}  // namespace smart::fixtures
