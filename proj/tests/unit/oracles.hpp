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


// Independent reference implementations and generators shared by the unit,
// property and acceptance suites. Nothing here calls the code under test
// beyond Graph storage and Term construction.

#ifndef SMART_TESTS_ORACLES_HPP_
#define SMART_TESTS_ORACLES_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smart/graph.hpp"
#include "smart/matcher.hpp"
#include "smart/query.hpp"
#include "smart/service_model.hpp"
#include "smart/term.hpp"

namespace smart::testing {

using TripleSet = std::set<Triple>;

TripleSet tripleSet(const Graph& g);
bool isSubset(const Graph& a, const Graph& b);

/// Graph isomorphism up to blank node renaming: colour refinement over the
/// blank nodes, then backtracking over equally coloured candidates.
bool isomorphic(const Graph& a, const Graph& b);

struct RandomGraphOptions {
  std::size_t triples = 100;
  std::size_t nodes = 50;
  std::size_t predicates = 8;
  /// Fraction of triples drawn from the schema vocabulary (subClassOf,
  /// subPropertyOf, inverseOf, equivalentProperty, transitivity markers).
  double schemaRate = 0.0;
  double blankRate = 0.0;
  double literalRate = 0.0;
};

/// Triples over ex: IRIs, blank nodes and literals of every datatype.
Graph randomGraph(std::mt19937& rng, const RandomGraphOptions& options);

/// Random graph over the root-input rule body vocabulary: RootInputParameter typing,
/// hasRestInput / restInputOf and subInputOf / fromLogicalInput edges.
Graph randomRootInputGraph(std::mt19937& rng, std::size_t triples);

/// (rootInput, service) pairs obtained by applying the root-input rule with three nested
/// loops until nothing changes, after closing hasRestInput under its inverse
/// and subInputOf under its subproperty and transitivity.
std::set<std::pair<Term, Term>> naiveRootInput(const Graph& g);

/// Brute-force scorer: every (service, relation) pair with ranks recomputed
/// from raw subClassOf / subPropertyOf / equivalentProperty / inverseOf edges
/// by graph search.
struct ScoredCandidate {
  Iri service;
  Iri relation;
  int predicateRank;
  int inputRank;
  int outputRank;
  bool inverted;
};
std::vector<ScoredCandidate> bruteForceCandidates(const ServiceRegistry& r,
                                                  const SubQuery& q);
/// Winner under (ranks, service IRI, relation IRI); nullopt when none.
std::optional<ScoredCandidate> bruteForceMatch(const ServiceRegistry& r,
                                               const SubQuery& q);

/// The fixture ontology with every triple of the standalone GetOperator
/// descriptor removed, serialized as Turtle.
std::string ontologyWithoutGetOperator();
/// The standalone GetOperator descriptor plus a second root input.
std::string twoRootInputMutant();

/// Replaces session IRIs (urn:smart:session:...) with blank nodes so result
/// graphs can be compared with the isomorphism oracle.
Graph anonymize(const Graph& g);

/// Fixture ontology loaded and extracted once per process.
const ServiceRegistry& fixtureRegistry();
std::shared_ptr<const Graph> fixtureGraph();

Iri ex(const std::string& local);

/// Coordinate-input GeoNames variant: Location in (latitude, longitude),
/// Region out with a Country sub-output, linked by :location. Appended to
/// the fixture ontology so the domain vocabulary is available.
std::string regionOntology();
/// The response document of the coordinate lookup, verbatim.
inline constexpr const char* kRegionXml =
    "<resp><name>beirut</name><country><name>Lebanon</name><id>LB</id>"
    "</country></resp>";
const ServiceRegistry& regionRegistry();

}  // namespace smart::testing

#endif  // SMART_TESTS_ORACLES_HPP_
