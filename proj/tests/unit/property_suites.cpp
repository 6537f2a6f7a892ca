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


#include "property_suites.hpp"

#include <chrono>
#include <random>

#include "oracles.hpp"
#include "smart/errors.hpp"
#include "smart/reasoner.hpp"
#include "smart/turtle.hpp"
#include "smart/vocabulary.hpp"

namespace smart::testing {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fail(SuiteResult& r, const std::string& what) {
  if (r.ok) r.detail = what;
  r.ok = false;
}

bool sameGraph(const Graph& a, const Graph& b) {
  return a.size() == b.size() && isSubset(a, b);
}

}  // namespace

SuiteResult saturationSuite(std::size_t graphs, std::size_t maxTriples) {
  SuiteResult r;
  Timer timer;
  std::mt19937 rng(1001);
  for (std::size_t i = 0; i < graphs; ++i) {
    RandomGraphOptions o;
    o.triples = std::uniform_int_distribution<std::size_t>(1, maxTriples)(rng);
    o.nodes = 40 + o.triples / 4;
    o.schemaRate = 0.04;
    o.predicates = 60;
    o.literalRate = 0.1;
    o.blankRate = 0.05;
    Graph big = randomGraph(rng, o);
    Graph small;
    for (const Triple& t : big.triples())
      if (rng() % 2) small.insert(t);
    try {
      Graph satBig = saturate(big);
      Graph satSmall = saturate(small);
      if (!isSubset(big, satBig)) fail(r, "graph " + std::to_string(i) + ": G not in sat(G)");
      if (!sameGraph(saturate(satBig), satBig))
        fail(r, "graph " + std::to_string(i) + ": not idempotent");
      if (!isSubset(satSmall, satBig))
        fail(r, "graph " + std::to_string(i) + ": not monotone");
    } catch (const Error& e) {
      fail(r, "graph " + std::to_string(i) + ": " + e.what());
    }
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult roundtripSuite(std::size_t graphs, std::size_t maxTriples) {
  SuiteResult r;
  Timer timer;
  std::mt19937 rng(2002);
  for (std::size_t i = 0; i < graphs; ++i) {
    RandomGraphOptions o;
    o.triples = std::uniform_int_distribution<std::size_t>(0, maxTriples)(rng);
    o.nodes = 10 + o.triples / 3;
    o.blankRate = 0.2;
    o.literalRate = 0.3;
    o.schemaRate = 0.05;
    Graph g = randomGraph(rng, o);
    try {
      Graph back = parseDocument(serialize(g));
      if (!isomorphic(g, back))
        fail(r, "graph " + std::to_string(i) + " (" + std::to_string(g.size()) +
                    " triples) not isomorphic after roundtrip");
    } catch (const Error& e) {
      fail(r, "graph " + std::to_string(i) + ": " + e.what());
    }
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult indexSuite(std::size_t triples, std::size_t patterns) {
  SuiteResult r;
  Timer timer;
  std::mt19937 rng(3003);
  RandomGraphOptions o;
  o.triples = triples;
  o.nodes = 300;
  o.predicates = 12;
  o.literalRate = 0.2;
  o.blankRate = 0.1;
  Graph g = randomGraph(rng, o);
  const auto all = g.triples();
  for (std::size_t i = 0; i < patterns; ++i) {
    const Triple& pick = all[rng() % all.size()];
    std::optional<Term> s, obj;
    std::optional<Iri> p;
    // Bound positions come from an existing triple or, one time in eight,
    // from a term that is absent from the graph.
    if (rng() % 2) s = rng() % 8 ? pick.subject : Term(ex("absent"));
    if (rng() % 2) p = rng() % 8 ? pick.predicate : ex("absentP");
    if (rng() % 2) obj = rng() % 8 ? pick.object : Term(Literal("absent"));
    std::set<Triple> scan;
    for (const Triple& t : all)
      if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!obj || t.object == *obj))
        scan.insert(t);
    auto hits = g.match(s, p, obj);
    std::set<Triple> indexed(hits.begin(), hits.end());
    if (indexed != scan || hits.size() != indexed.size())
      fail(r, "pattern " + std::to_string(i) + ": index returned " +
                  std::to_string(hits.size()) + ", scan " + std::to_string(scan.size()));
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult rootInputSuite(std::size_t graphs, std::size_t maxTriples) {
  SuiteResult r;
  Timer timer;
  std::mt19937 rng(4004);
  const Graph axioms = vocab::axioms();
  for (std::size_t i = 0; i < graphs; ++i) {
    Graph data = randomRootInputGraph(rng, maxTriples);
    Graph input = axioms;
    input.insertAll(data);
    Graph sat = saturate(input);
    std::set<std::pair<Term, Term>> derived;
    for (const Triple& t : sat.match(std::nullopt, vocab::rootInputOf, std::nullopt))
      derived.insert({t.subject, t.object});
    if (derived != naiveRootInput(data))
      fail(r, "graph " + std::to_string(i) + ": saturate gives " +
                  std::to_string(derived.size()) + " rootInputOf facts, oracle " +
                  std::to_string(naiveRootInput(data).size()));
    ++r.cases;
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace smart::testing
