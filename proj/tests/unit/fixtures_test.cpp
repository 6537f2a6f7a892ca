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

#include "oracles.hpp"
#include "smart/errors.hpp"
#include "smart/executor.hpp"
#include "smart/fixtures.hpp"
#include "smart/transport.hpp"
#include "smart/vocabulary.hpp"
#include "smart/xml.hpp"

namespace smart {
namespace {

namespace v = vocab;
using namespace smart::fixtures;

TEST(FixtureData, NormativeConstants) {
  EXPECT_EQ(kPort, 7341);
  EXPECT_EQ(operatorMap().at("03"), "Alfa");
  EXPECT_EQ(operatorMap().at("70"), "Touch");
  bool beirut = false;
  for (const auto& r : geoRecords())
    if (r.name == "beirut") {
      beirut = true;
      EXPECT_EQ(r.countryName, "Lebanon");
      EXPECT_EQ(r.countryCode, "LB");
      EXPECT_EQ(r.lat, "33.88894");
      EXPECT_EQ(r.lng, "35.49442");
    }
  EXPECT_TRUE(beirut);
  EXPECT_GE(geoRecords().size(), 3u);
}

TEST(FixtureData, AtLeastThreeMeasurementsPerProvider) {
  std::map<std::string, int> perProvider;
  for (const auto& m : measurements()) ++perProvider[m.provider];
  for (const auto& [prefix, name] : operatorMap()) EXPECT_GE(perProvider[name], 3) << name;
  EXPECT_EQ(measurementsCsv().substr(0, measurementsCsv().find('\n')),
            "provider,lat,lng,strengthDbm");
}

TEST(FixtureData, ResponseBodies) {
  EXPECT_EQ(operatorXml("03123456"), "<Operator>Alfa</Operator>");
  EXPECT_EQ(operatorXml("99123456"), std::nullopt);
  XmlNode geo = parseXml(geoSearchXml("beirut"));
  EXPECT_EQ(geo.name, "geonames");
  XmlNode sig = parseXml(signalXml("alfa"));
  EXPECT_EQ(sig.children.size(), 3u);
  XmlNode rl = jsonToXml(reverseLookupJson("03123456"));
  EXPECT_EQ(rl.name, "resp");
}

TEST(FixtureData, Deterministic) {
  EXPECT_EQ(geoSearchXml("beirut"), geoSearchXml("beirut"));
  EXPECT_EQ(signalXml("Touch"), signalXml("Touch"));
  EXPECT_EQ(reverseLookupJson("70987654"), reverseLookupJson("70987654"));
}

class FixtureServerTest : public ::testing::Test {
 protected:
  FixtureServer server{0};
  HttpTransport http;
  TransportResponse get(const std::string& path) {
    return http.get({server.baseUrl() + path, 2000});
  }
};

TEST_F(FixtureServerTest, GeoSearch) {
  auto r = get("geoSearch?q=beirut");
  EXPECT_EQ(r.status, 200);
  EXPECT_NE(r.body.find("<geoname>"), std::string::npos);
  EXPECT_NE(r.body.find("<lat>33.88894</lat>"), std::string::npos);
  EXPECT_NE(r.body.find("<lng>35.49442</lng>"), std::string::npos);
}

TEST_F(FixtureServerTest, GetOperator) {
  auto r = get("getOperator?n=03123456");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, "<Operator>Alfa</Operator>");
  EXPECT_EQ(get("getOperator").status, 400);
  EXPECT_EQ(get("getOperator?n=99").status, 404);
}

TEST_F(FixtureServerTest, ByteIdenticalResponses) {
  EXPECT_EQ(get("signal?provider=Alfa").body, get("signal?provider=Alfa").body);
  EXPECT_EQ(get("reverseLookup?phone=03123456&apiKey=21o2iu34oiu1234").body,
            get("reverseLookup?phone=03123456&apiKey=21o2iu34oiu1234").body);
}

TEST_F(FixtureServerTest, PortInUse) {
  try {
    FixtureServer second(server.port());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PortInUse");
  }
}

TEST_F(FixtureServerTest, UnreachableIsTransportError) {
  int port = server.port();
  server.stop();
  EXPECT_THROW(http.get({"http://127.0.0.1:" + std::to_string(port) + "/getOperator?n=1", 500}),
               TransportError);
}

// Every descriptor's paths fit the shape its fixture endpoint serves.
TEST_F(FixtureServerTest, DescriptorsMatchResponseShapes) {
  const auto& reg = testing::fixtureRegistry();
  const Graph& g = *reg.ontology;
  const std::map<std::string, std::vector<Binding>> samples = {
      {"GeoNamesSearch", {{v::ont("GNS_q_RI"), "beirut"}}},
      {"GetOperatorService", {{v::ont("GO_number_RI"), "03123456"}}},
      {"SignalMeasurement", {{v::ont("SM_provider_RI"), "Touch"}}},
      {"TrueCallerReverseLookup", {{v::ont("TCRL_phone_RI"), "03123456"}}},
  };
  ASSERT_EQ(samples.size(), reg.services.size());
  for (const auto& [local, bindings] : samples) {
    ServiceDescriptor d = *reg.find(v::ont(local));
    d.endpoint = server.baseUrl() + d.endpoint.substr(kBaseUrl.size());
    auto resp = http.get({buildUrl(d, bindings, g), 2000});
    ASSERT_EQ(resp.status, 200) << local;
    Session session("fx");
    ResultGraph r = buildOutputs(d, parseResponseBody(resp), session.fresh(), Graph{},
                                 session, g);
    EXPECT_FALSE(r.roots.empty()) << local;
    EXPECT_TRUE(r.warnings.empty()) << local << ": " << r.warnings.front();
    std::size_t literals = 0;
    for (const Triple& t : r.triples.triples()) literals += isLiteral(t.object);
    EXPECT_EQ(literals, r.roots.size() * d.restOutputs.size()) << local;
  }
}

}  // namespace
}  // namespace smart
