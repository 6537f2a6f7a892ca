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


// Acceptance checks, one test per criterion. A listener prints a single
// PASS/FAIL line per criterion after gtest's own output.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>

#include "oracles.hpp"
#include "property_suites.hpp"
#include "smart/executor.hpp"
#include "smart/fixtures.hpp"
#include "smart/gateway.hpp"
#include "smart/matcher.hpp"
#include "smart/ontology.hpp"
#include "smart/query.hpp"
#include "smart/service_model.hpp"
#include "smart/transport.hpp"
#include "smart/turtle.hpp"
#include "smart/vocabulary.hpp"
#include "smart/xml.hpp"

namespace smart {
namespace {

namespace v = vocab;
using namespace smart::testing;

// Time limits, in seconds.
constexpr double kRegionOutputLimit = 1.0;
constexpr double kEndToEndLimit = 2.0;
constexpr double kPropertySuiteLimit = 30.0;

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

TEST(Acceptance, RegionOutputReproduction) {
  auto start = std::chrono::steady_clock::now();
  const ServiceRegistry& reg = regionRegistry();
  const ServiceDescriptor& d = *reg.find(v::ont("GeoNamesByCoordinates"));
  Session session("accept");
  Graph seedGraph;
  Iri input = buildSeed(d, {{v::ont("GBC_lat_RI"), "33.88894"}, {v::ont("GBC_lng_RI"), "35.49442"}},
                        *reg.ontology, session, seedGraph);
  ResultGraph r = buildOutputs(d, parseXml(kRegionXml), input, seedGraph, session,
                               *reg.ontology);
  const double elapsed = since(start);

  Graph expected = parseDocument(R"(@prefix : <http://smart.example/ont#> .
[] a :Region ; :name "beirut" ;
   :inCountry [ a :Country ; :name "Lebanon" ; :id "LB" ] ;
   :location [ a :Location ; :latitude 33.88894 ; :longitude 35.49442 ] .
)");
  EXPECT_TRUE(isomorphic(anonymize(r.triples), expected)) << serialize(r.triples);
  ASSERT_EQ(r.roots.size(), 1u);
  auto lat = r.triples.objects(input, v::ont("latitude"));
  auto lng = r.triples.objects(input, v::ont("longitude"));
  ASSERT_EQ(lat.size(), 1u);
  ASSERT_EQ(lng.size(), 1u);
  EXPECT_EQ(std::get<Literal>(lat[0]).lexical(), "33.88894");
  EXPECT_EQ(std::get<Literal>(lng[0]).lexical(), "35.49442");
  EXPECT_TRUE(r.triples.contains({r.roots[0], v::ont("location"), input}));
  EXPECT_LT(elapsed, kRegionOutputLimit);
}

TEST(Acceptance, RuleInference) {
  const Iri go = v::ont("GetOperatorService");
  const Iri rli = v::ont("GO_PhoneNumber_RLI");
  const Iri rel = v::ont("GO_IORel");
  Graph authored = parseDocument(fixtures::servicesTurtle());
  Graph stripped;
  for (const Triple& t : authored.triples()) {
    if (t.predicate == v::rootInputOf && t.subject == Term(rli)) continue;
    if (t.predicate == v::hasIORelation && t.subject == Term(go)) continue;
    stripped.insert(t);
  }
  ASSERT_FALSE(stripped.contains({rli, v::rootInputOf, go}));
  Graph asserted = authored;
  asserted.insert({rli, v::rootInputOf, go});
  asserted.insert({go, v::hasIORelation, rel});

  Graph derived = loadOntology(serialize(stripped));
  EXPECT_TRUE(derived.contains({rli, v::rootInputOf, go}));
  EXPECT_TRUE(derived.contains({go, v::hasIORelation, rel}));
  // Exactly these: no other root input or relation is attached to GO.
  EXPECT_EQ(derived.match(std::nullopt, v::rootInputOf, Term(go)).size(), 1u);
  EXPECT_EQ(derived.match(Term(go), v::hasIORelation, std::nullopt).size(), 1u);

  auto a = buildDescriptor(derived, go);
  auto b = buildDescriptor(loadOntology(serialize(asserted)), go);
  ASSERT_TRUE(a.first.has_value()) << a.second.toText();
  ASSERT_TRUE(b.first.has_value()) << b.second.toText();
  EXPECT_EQ(*a.first, *b.first);
}

TEST(Acceptance, QueryPlanGoldens) {
  const Graph& g = *fixtureGraph();
  QueryPlan p1 = parseQuery(g, "find places related to this place");
  EXPECT_EQ(p1, (QueryPlan{{{v::ont("Place"), v::ont("relatedTo"), v::ont("Place")}},
                           v::ont("Place")}));
  QueryPlan p2 = parseQuery(g, "find the provider of this phone number");
  EXPECT_EQ(p2, (QueryPlan{{{v::ont("PhoneNumber"), v::ont("providerOf"), std::nullopt}},
                           v::ont("PhoneNumber")}));
  QueryPlan p3 =
      parseQuery(g, "find the signal strength of the provider of this phone number");
  EXPECT_EQ(p3, (QueryPlan{{{v::ont("PhoneNumber"), v::ont("providerOf"), std::nullopt},
                            {std::nullopt, v::ont("signalStrengthMeasurementOf"),
                             std::nullopt}},
                           v::ont("PhoneNumber")}));
}

// Twelve subqueries per service: the relation predicate, an equivalent and
// an inverse partner, each with exact or absent input and output types.
std::vector<SubQuery> generatedSubqueries(const ServiceDescriptor& d, const Graph& g) {
  const IORelation& rel = d.ioRelations.front();
  const auto inType = d.findNode(rel.objectParam)->typeClass;
  const auto outType = d.findNode(rel.subjectParam)->typeClass;
  auto syn = predicateSynonyms(g, rel.predicate);
  Iri equivalent = rel.predicate;
  for (const Iri& e : syn.equivalents)
    if (e != rel.predicate) equivalent = e;
  std::optional<Iri> inverse;
  for (const Iri& i : syn.inverse) inverse = i;

  std::vector<SubQuery> out;
  for (int variant = 0; variant < 3; ++variant) {
    for (bool keepIn : {true, false}) {
      for (bool keepOut : {true, false}) {
        SubQuery q;
        if (variant == 2 && inverse) {
          q.predicate = *inverse;
          if (keepIn) q.inputType = outType;
          if (keepOut) q.outputType = inType;
        } else {
          q.predicate = variant == 1 ? equivalent : rel.predicate;
          if (keepIn) q.inputType = inType;
          if (keepOut) q.outputType = outType;
        }
        out.push_back(q);
      }
    }
  }
  return out;
}

TEST(Acceptance, MatchingGoldens) {
  const ServiceRegistry& reg = fixtureRegistry();
  EXPECT_EQ(matchService(reg, {v::ont("PhoneNumber"), v::ont("providerOf"), std::nullopt}).service,
            v::ont("GetOperatorService"));
  MatchResult similar = matchService(reg, {v::ont("Place"), v::ont("similarTo"), v::ont("Place")});
  EXPECT_EQ(similar.service, v::ont("GeoNamesSearch"));
  EXPECT_EQ(similar.specificity.predicateRank, 0);

  ASSERT_EQ(reg.services.size(), 4u);
  std::size_t compared = 0;
  for (const auto& [iri, d] : reg.services) {
    auto queries = generatedSubqueries(d, *reg.ontology);
    ASSERT_EQ(queries.size(), 12u);
    for (const SubQuery& q : queries) {
      auto expected = bruteForceMatch(reg, q);
      std::optional<MatchResult> actual;
      try {
        actual = matchService(reg, q);
      } catch (const NoServiceFound&) {
      }
      ASSERT_EQ(actual.has_value(), expected.has_value()) << toString(q);
      ++compared;
      if (!actual) continue;
      EXPECT_EQ(actual->service, expected->service) << toString(q);
      EXPECT_EQ(actual->relation.iri, expected->relation) << toString(q);
      EXPECT_EQ(actual->inverted, expected->inverted) << toString(q);
      EXPECT_EQ(actual->specificity,
                (Specificity{expected->predicateRank, expected->inputRank,
                             expected->outputRank}))
          << toString(q);
    }
  }
  EXPECT_EQ(compared, 48u);
}

TEST(Acceptance, UrlGolden) {
  const ServiceRegistry& reg = fixtureRegistry();
  const Graph& g = *reg.ontology;
  EXPECT_EQ(buildUrl(*reg.find(v::ont("GetOperatorService")),
                     {{v::ont("GO_number_RI"), "03123456"}}, g),
            "http://127.0.0.1:7341/getOperator?n=03123456");
  ServiceDescriptor d = *reg.find(v::ont("TrueCallerReverseLookup"));
  d.variableInputs.at(0).parameterName = "q";
  const std::string url = buildUrl(d, {{d.variableInputs[0].iri, "x"}}, g);
  const std::string tail = "?apiKey=21o2iu34oiu1234&q=x";
  ASSERT_GE(url.size(), tail.size());
  EXPECT_EQ(url.substr(url.size() - tail.size()), tail) << url;
}

TEST(Acceptance, EndToEndMashup) {
  auto start = std::chrono::steady_clock::now();
  fixtures::FixtureServer server(0);
  ServiceRegistry reg = fixtureRegistry();
  for (auto& [iri, d] : reg.services)
    d.endpoint = server.baseUrl() + d.endpoint.substr(fixtures::kBaseUrl.size());
  HttpTransport http;
  QueryPlan plan = parseQuery(*reg.ontology,
                              "find the signal strength of the provider of this phone number");
  ResultGraph r = executePlan(reg, plan, {{v::ont("GO_number_RI"), "03123456"}}, http, "e2e");
  const double elapsed = since(start);

  ASSERT_EQ(r.stageRoots.size(), 2u);
  ASSERT_EQ(r.stageRoots[0].size(), 1u);
  const Iri provider = r.stageRoots[0][0];
  EXPECT_TRUE(r.triples.contains({provider, v::rdfType, v::ont("ServiceProvider")}));
  EXPECT_TRUE(r.triples.contains({provider, v::ont("providerName"), Literal("Alfa")}));
  EXPECT_TRUE(r.triples.contains({provider, v::ont("providerOf"), r.inputIndividual}));
  EXPECT_TRUE(r.triples.contains({r.inputIndividual, v::ont("msisdn"), Literal("03123456")}));
  ASSERT_FALSE(r.stageRoots[1].empty());
  for (const Iri& m : r.stageRoots[1]) {
    bool linked = r.triples.contains({m, v::ont("signalStrengthMeasurementOf"), provider}) ||
                  r.triples.contains({provider, v::ont("signalStrengthMeasurementOf"), m});
    EXPECT_TRUE(linked) << m.str();
  }
  EXPECT_LT(elapsed, kEndToEndLimit);
}

TEST(Acceptance, PropertySuites) {
  struct Named {
    const char* name;
    SuiteResult result;
  };
  Named suites[] = {{"saturation idempotence/monotonicity", saturationSuite(200, 1000)},
                    {"turtle roundtrip", roundtripSuite(100, 500)},
                    {"index vs scan", indexSuite(10000, 200)},
                    {"root-input rule oracle", rootInputSuite(100, 50)}};
  for (const auto& s : suites) {
    std::printf("  suite %-38s cases=%zu time=%.2fs\n", s.name, s.result.cases,
                s.result.seconds);
    EXPECT_TRUE(s.result.ok) << s.name << ": " << s.result.detail;
    EXPECT_LT(s.result.seconds, kPropertySuiteLimit) << s.name;
  }
}

TEST(Acceptance, RegistrationFlow) {
  fixtures::FixtureServer server(0);
  GatewayOptions options;
  options.endpointRewrite = {std::string(fixtures::kBaseUrl), server.baseUrl()};
  Gateway gateway(ontologyWithoutGetOperator(), std::make_shared<HttpTransport>(), options);
  const std::size_t before = gateway.snapshot()->registry.services.size();
  ASSERT_EQ(before, 3u);

  ApiResponse reg = gateway.registerTurtle(std::string(fixtures::getOperatorTurtle()));
  ASSERT_EQ(reg.status, 200) << reg.body.dump();
  EXPECT_EQ(gateway.snapshot()->registry.services.size(), before + 1);
  ApiResponse run = gateway.execute("find the provider of this phone number",
                                    {{":GO_number_RI", "03123456"}});
  ASSERT_EQ(run.status, 200) << run.body.dump();
  ASSERT_EQ(run.body["roots"].size(), 1u);

  auto snapshotBefore = gateway.snapshot();
  ApiResponse bad = gateway.registerTurtle(twoRootInputMutant());
  EXPECT_EQ(bad.status, 422);
  bool sisoViolation = false;
  for (const auto& rep : bad.body["reports"])
    for (const auto& e : rep["errors"]) sisoViolation |= e["code"] == "MultipleRootInputs";
  EXPECT_TRUE(sisoViolation) << bad.body.dump();
  EXPECT_EQ(gateway.snapshot(), snapshotBefore);
  EXPECT_EQ(gateway.snapshot()->registry.services.size(), before + 1);
}

class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const auto* r = info.result();
    lines_.push_back(std::string(r->Passed() ? "PASS " : "FAIL ") + criterion(info.name()) +
                     " (" + std::to_string(r->elapsed_time()) + " ms)");
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::printf("\n");
    for (const auto& l : lines_) std::printf("%s\n", l.c_str());
    std::fflush(stdout);
  }

 private:
  static std::string criterion(const std::string& name) {
    static const std::map<std::string, std::string> names = {
        {"RegionOutputReproduction", "region output reproduction"},
        {"RuleInference", "rule inference"},
        {"QueryPlanGoldens", "query-plan goldens"},
        {"MatchingGoldens", "matching goldens"},
        {"UrlGolden", "url golden"},
        {"EndToEndMashup", "end-to-end mashup"},
        {"PropertySuites", "property suites"},
        {"RegistrationFlow", "registration flow"}};
    auto it = names.find(name);
    return it == names.end() ? name : it->second;
  }
  std::vector<std::string> lines_;
};

}  // namespace
}  // namespace smart

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new smart::CriterionPrinter);
  return RUN_ALL_TESTS();
}
