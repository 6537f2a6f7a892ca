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

// Command-line front end: serve, validate, query, dump-registry.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smart/errors.hpp"
#include "smart/fixtures.hpp"
#include "smart/gateway.hpp"
#include "smart/ontology.hpp"
#include "smart/service_model.hpp"

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw smart::Error("IoError", "cannot read " + path, {{"path", path}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ontologyPath(const std::string& flag) {
  if (const char* env = std::getenv("SMART_ONTOLOGY"); env != nullptr && *env != '\0')
    return env;
  return flag;
}

void printError(const smart::Error& e) {
  std::cerr << smart::errorBody(e).dump(2) << "\n";
}

/// Starts the fixture server on its usual port, or on a free one when that
/// is taken, and returns the endpoint rewrite to apply.
std::unique_ptr<smart::fixtures::FixtureServer> startFixtures(
    smart::GatewayOptions& options) {
  std::unique_ptr<smart::fixtures::FixtureServer> server;
  try {
    server = std::make_unique<smart::fixtures::FixtureServer>(smart::fixtures::kPort);
  } catch (const smart::Error& e) {
    if (e.code() != "PortInUse") throw;
    server = std::make_unique<smart::fixtures::FixtureServer>(0);
  }
  options.endpointRewrite = {std::string(smart::fixtures::kBaseUrl), server->baseUrl()};
  std::cerr << "fixtures listening on " << server->baseUrl() << "\n";
  return server;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic REST service registry and mashup engine"};
  app.require_subcommand(1);

  std::string ontology;
  int port = 8080;
  bool withFixtures = false;
  std::string staticDir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--ontology", ontology, "Ontology file (Turtle)");
  serve->add_option("--port", port, "Listen port");
  serve->add_flag("--fixtures", withFixtures, "Start the local fixture services");
  serve->add_option("--static", staticDir, "Directory of static web assets");

  std::string validatePath;
  auto* validate = app.add_subcommand("validate", "Validate every service in an ontology");
  validate->add_option("path", validatePath, "Ontology file")->required();

  std::string queryText;
  std::vector<std::string> binds;
  auto* query = app.add_subcommand("query", "Execute a query and print the result");
  query->add_option("text", queryText, "Query sentence")->required();
  query->add_option("--bind", binds, "paramIri=value");
  query->add_option("--ontology", ontology, "Ontology file (Turtle)");
  query->add_flag("--fixtures", withFixtures, "Start the local fixture services");

  auto* dump = app.add_subcommand("dump-registry", "Print the service descriptors");
  dump->add_option("--ontology", ontology, "Ontology file (Turtle)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      auto graph = std::make_shared<const smart::Graph>(
          smart::loadOntology(readFile(validatePath)));
      auto [registry, reports] = smart::extractRegistry(graph);
      bool ok = true;
      for (const auto& r : reports) {
        std::cout << r.toText();
        ok = ok && r.ok();
      }
      std::cout << registry.services.size() << " of " << reports.size()
                << " service(s) valid\n";
      return ok ? 0 : 1;
    }

    const std::string path = ontologyPath(ontology);
    if (path.empty()) {
      std::cerr << "an ontology is required (--ontology or SMART_ONTOLOGY)\n";
      return 2;
    }
    smart::GatewayOptions options;
    std::unique_ptr<smart::fixtures::FixtureServer> fixtureServer;
    if (withFixtures) fixtureServer = startFixtures(options);

    if (*serve) {
      options.ontologyPath = path;
      smart::Gateway gateway(readFile(path), std::make_shared<smart::HttpTransport>(),
                             options);
      smart::HttpServer server(gateway, staticDir.empty()
                                            ? std::nullopt
                                            : std::optional<std::string>(staticDir));
      std::cerr << "listening on http://0.0.0.0:" << port << "\n";
      server.run("0.0.0.0", port);
      return 0;
    }

    smart::Gateway gateway(readFile(path), std::make_shared<smart::HttpTransport>(),
                           options);
    if (*dump) {
      smart::Json out = smart::Json::array();
      for (const auto& [iri, d] : gateway.snapshot()->registry.services)
        out.push_back(smart::toJson(d));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    std::map<std::string, std::string> bindings;
    for (const auto& b : binds) {
      auto eq = b.find('=');
      if (eq == std::string::npos) {
        std::cerr << "--bind expects paramIri=value, got " << b << "\n";
        return 2;
      }
      bindings[b.substr(0, eq)] = b.substr(eq + 1);
    }
    auto res = gateway.execute(queryText, bindings);
    (res.status == 200 ? std::cout : std::cerr) << res.body.dump(2) << "\n";
    return res.status == 200 ? 0 : 1;
  } catch (const smart::Error& e) {
    printError(e);
    return 1;
  }
}
