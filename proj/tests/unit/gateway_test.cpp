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


#include <gtest/gtest.h>

#include <httplib.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "oracles.hpp"
#include "smart/fixtures.hpp"
#include "smart/gateway.hpp"
#include "smart/turtle.hpp"
#include "smart/vocabulary.hpp"

namespace smart {
namespace {

namespace v = vocab;

std::shared_ptr<FakeTransport> cannedTransport() {
  auto t = std::make_shared<FakeTransport>();
  t->set("http://127.0.0.1:7341/getOperator?n=03123456",
         {200, "text/xml", "<Operator>Alfa</Operator>"});
  t->set("http://127.0.0.1:7341/geoSearch?username=smart&q=beirut",
         {200, "text/xml", fixtures::geoSearchXml("beirut")});
  return t;
}

class GatewayTest : public ::testing::Test {
 protected:
  std::shared_ptr<FakeTransport> transport = cannedTransport();
  Gateway gateway{fixtures::servicesTurtle(), transport};
};

TEST_F(GatewayTest, AnalyzeProviderOf) {
  ApiResponse r = gateway.analyze("find the provider of this phone number");
  ASSERT_EQ(r.status, 200) << r.body.dump();
  const Json& form = r.body["formSpec"];
  EXPECT_EQ(form["serviceIri"], v::ont("GetOperatorService").str());
  ASSERT_EQ(form["fields"].size(), 1u);
  EXPECT_EQ(form["fields"][0]["label"], "MSISDN");
  EXPECT_EQ(form["fields"][0]["valueType"], "string");
  EXPECT_EQ(r.body["plan"]["stages"][0]["predicate"], v::ont("providerOf").str());
  EXPECT_EQ(r.body["plan"]["stages"][0]["predicateLabel"], "provider of");
}

TEST_F(GatewayTest, AnalyzePlacesMatchesGeoNames) {
  ApiResponse r = gateway.analyze("find places related to this place");
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body["matchedServices"].size(), 1u);
  EXPECT_EQ(r.body["matchedServices"][0]["service"], v::ont("GeoNamesSearch").str());
  EXPECT_EQ(r.body["formSpec"]["serviceIri"], v::ont("GeoNamesSearch").str());
}

TEST_F(GatewayTest, AnalyzeUnknownLabel) {
  ApiResponse r = gateway.analyze("find xyzzy of this plugh");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "UnknownLabel");
  EXPECT_TRUE(r.body["context"].contains("phrase"));
}

TEST_F(GatewayTest, AnalyzeHasNoSideEffects) {
  auto before = gateway.snapshot();
  gateway.analyze("find places related to this place");
  EXPECT_EQ(gateway.snapshot(), before);
  EXPECT_TRUE(transport->requests().empty());
}

TEST_F(GatewayTest, ExecuteGetOperator) {
  ApiResponse r = gateway.execute("find the provider of this phone number",
                                  {{":GO_number_RI", "03123456"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body["roots"].size(), 1u);
  EXPECT_TRUE(r.body["geo"].empty());
  const std::string rootId = r.body["roots"][0];
  bool found = false;
  for (const Json& n : r.body["nodes"]) {
    if (n["id"] != rootId) continue;
    found = true;
    EXPECT_EQ(n["type"], v::ont("ServiceProvider").str());
    EXPECT_EQ(n["literals"][v::ont("providerName").str()][0], "Alfa");
  }
  EXPECT_TRUE(found);
}

TEST_F(GatewayTest, ExecuteGeoSearchHasCoordinates) {
  ApiResponse r = gateway.execute("find places related to this place",
                                  {{v::ont("GNS_q_RI").str(), "beirut"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_FALSE(r.body["geo"].empty());
  bool beirut = false;
  for (const Json& g : r.body["geo"])
    if (g["lat"].get<double>() == 33.88894 && g["lng"].get<double>() == 35.49442) beirut = true;
  EXPECT_TRUE(beirut);
  // geo holds exactly the nodes carrying both coordinates.
  std::size_t withBoth = 0;
  for (const Json& n : r.body["nodes"])
    withBoth += n["literals"].contains(v::ont("latitude").str()) &&
                n["literals"].contains(v::ont("longitude").str());
  EXPECT_EQ(withBoth, r.body["geo"].size());
}

TEST_F(GatewayTest, ExecuteMissingBinding) {
  ApiResponse r = gateway.execute("find the provider of this phone number", {});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "MissingMandatoryInput");
  EXPECT_EQ(r.body["context"]["param"], v::ont("GO_number_RI").str());
}

TEST_F(GatewayTest, ExecuteStatusMapping) {
  EXPECT_EQ(gateway.execute("find the provider of this phone number",
                            {{":GO_number_RI", "70000000"}})
                .status,
            502);
  EXPECT_EQ(gateway.execute("find the provider of this place", {}).status, 404);
}

TEST_F(GatewayTest, RegisterBrokenTurtle) {
  ApiResponse r = gateway.registerTurtle("@prefix : <http://smart.example/ont#> .\n:a :b");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "ParseError");
  EXPECT_EQ(r.body["context"]["line"], "2");
}

TEST_F(GatewayTest, JsonEndpointsValidateBodies) {
  EXPECT_EQ(gateway.analyzeJson("not json").status, 400);
  EXPECT_EQ(gateway.analyzeJson(R"({"q": 1})").status, 400);
  EXPECT_EQ(gateway.analyzeJson(R"({"query": "find places related to this place"})").status,
            200);
  EXPECT_EQ(gateway.executeJson(R"({"query": "x", "bindings": []})").status, 400);
  ApiResponse r = gateway.executeJson(
      R"({"query": "find the provider of this phone number", "bindings": {":GO_number_RI": "03123456"}})");
  EXPECT_EQ(r.status, 200) << r.body.dump();
}

TEST_F(GatewayTest, ServicesAndHealth) {
  ApiResponse s = gateway.services();
  ASSERT_EQ(s.body["services"].size(), 4u);
  for (const Json& e : s.body["services"]) EXPECT_TRUE(e["ok"].get<bool>());
  ApiResponse h = gateway.health();
  EXPECT_EQ(h.body["services"], 4);
}

TEST(GatewayRegister, GrowsRegistryAndServesQuery) {
  auto transport = cannedTransport();
  Gateway gateway(testing::ontologyWithoutGetOperator(), transport);
  ASSERT_EQ(gateway.snapshot()->registry.services.size(), 3u);
  EXPECT_EQ(gateway.analyze("find the provider of this phone number").status, 404);

  ApiResponse r = gateway.registerTurtle(std::string(fixtures::getOperatorTurtle()));
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(gateway.snapshot()->registry.services.size(), 4u);
  EXPECT_EQ(r.body["added"], Json::array({v::ont("GetOperatorService").str()}));
  ApiResponse q = gateway.execute("find the provider of this phone number",
                                  {{":GO_number_RI", "03123456"}});
  EXPECT_EQ(q.status, 200) << q.body.dump();
}

TEST(GatewayRegister, TwoRootInputsRejected) {
  Gateway gateway(testing::ontologyWithoutGetOperator(), cannedTransport());
  auto before = gateway.snapshot();
  ApiResponse r = gateway.registerTurtle(testing::twoRootInputMutant());
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["code"], "ValidationFailed");
  bool multiple = false;
  for (const Json& rep : r.body["reports"])
    for (const Json& e : rep["errors"]) multiple |= e["code"] == "MultipleRootInputs";
  EXPECT_TRUE(multiple) << r.body.dump();
  EXPECT_EQ(gateway.snapshot(), before);
}

TEST(GatewayRegister, PersistsMergedOntology) {
  auto path = std::filesystem::temp_directory_path() / "smart_gateway_persist.ttl";
  std::filesystem::remove(path);
  GatewayOptions options;
  options.ontologyPath = path.string();
  Gateway gateway(testing::ontologyWithoutGetOperator(), cannedTransport(), options);
  ASSERT_EQ(gateway.registerTurtle(std::string(fixtures::getOperatorTurtle())).status, 200);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Gateway reloaded(text, cannedTransport());
  EXPECT_EQ(reloaded.snapshot()->registry.services.size(), 4u);
  std::filesystem::remove(path);
}

TEST(GatewayRegister, SnapshotAtomicity) {
  Gateway gateway(testing::ontologyWithoutGetOperator(), cannedTransport());
  std::atomic<bool> done{false};
  std::atomic<int> bad{0};
  std::thread reader([&] {
    while (!done) {
      auto snap = gateway.snapshot();
      // Registry and reports always come from the same build.
      std::size_t ok = 0;
      for (const auto& r : snap->reports) ok += r.ok();
      if (ok != snap->registry.services.size()) ++bad;
      int status = gateway.analyze("find the provider of this phone number").status;
      if (status != 200 && status != 404) ++bad;
    }
  });
  gateway.registerTurtle(std::string(fixtures::getOperatorTurtle()));
  done = true;
  reader.join();
  EXPECT_EQ(bad, 0);
}

TEST(Gateway, EndpointRewrite) {
  GatewayOptions options;
  options.endpointRewrite = {std::string(fixtures::kBaseUrl), "http://127.0.0.1:9/"};
  Gateway gateway(fixtures::servicesTurtle(), cannedTransport(), options);
  const auto* d = gateway.snapshot()->registry.find(v::ont("GetOperatorService"));
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->endpoint, "http://127.0.0.1:9/getOperator");
}

TEST(Gateway, StatusTable) {
  EXPECT_EQ(statusFor("UnknownLabel"), 400);
  EXPECT_EQ(statusFor("NoServiceFound"), 404);
  EXPECT_EQ(statusFor("TransportError"), 502);
  EXPECT_EQ(statusFor("ValidationFailed"), 422);
  EXPECT_EQ(statusFor("SomethingElse"), 500);
}

TEST(Gateway, BindingKeys) {
  EXPECT_EQ(bindingKey(":GO_number_RI"), v::ont("GO_number_RI"));
  EXPECT_EQ(bindingKey(v::ont("x").str()), v::ont("x"));
}

TEST(HttpServer, RoundTrip) {
  Gateway gateway(fixtures::servicesTurtle(), cannedTransport());
  HttpServer server(gateway);
  int port = server.start("127.0.0.1", 0);
  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  auto analyze = client.Post("/api/analyze",
                             R"({"query": "find the provider of this phone number"})",
                             "application/json");
  ASSERT_TRUE(analyze);
  EXPECT_EQ(analyze->status, 200);
  auto body = Json::parse(analyze->body);
  EXPECT_EQ(body["formSpec"]["fields"][0]["label"], "MSISDN");
  auto execute = client.Post(
      "/api/execute",
      R"({"query": "find the provider of this phone number", "bindings": {":GO_number_RI": "03123456"}})",
      "application/json");
  ASSERT_TRUE(execute);
  EXPECT_EQ(execute->status, 200);
  auto services = client.Get("/api/services");
  ASSERT_TRUE(services);
  EXPECT_EQ(Json::parse(services->body)["services"].size(), 4u);
  auto reg = client.Post("/api/services", "@prefix : <x> . :a", "text/turtle");
  ASSERT_TRUE(reg);
  EXPECT_EQ(reg->status, 400);
  server.stop();
}

}  // namespace
}  // namespace smart
