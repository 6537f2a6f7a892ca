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

#ifndef SMART_MATCHER_HPP_
#define SMART_MATCHER_HPP_

#include <compare>
#include <vector>

#include "smart/errors.hpp"
#include "smart/query.hpp"
#include "smart/service_model.hpp"

namespace smart {

/// Generalization steps; 0 is exact. Ordered lexicographically.
struct Specificity {
  int predicateRank = 0;
  int inputRank = 0;
  int outputRank = 0;

  auto operator<=>(const Specificity&) const = default;
};

struct MatchResult {
  Iri service;
  IORelation relation;
  Specificity specificity;
  /// Matched through an inverse of the query predicate; the query's input
  /// and output types were checked against the swapped relation ends.
  bool inverted = false;

  bool operator==(const MatchResult&) const = default;
};

class NoServiceFound : public Error {
 public:
  explicit NoServiceFound(const SubQuery& q)
      : Error("NoServiceFound", "no service matches " + toString(q),
              {{"subquery", toString(q)}}),
        query_(q) {}
  const SubQuery& query() const noexcept { return query_; }

 private:
  SubQuery query_;
};

/// Subclass-chain distance from `node` up to `query`: the number of classes
/// e != node with node <= e <= query. An absent query type, or DomainThing,
/// matches anything at distance 0. nullopt when node is not a subclass.
std::optional<int> typeRank(const Graph& graph, const std::optional<Iri>& node,
                            const std::optional<Iri>& query);

/// Every (service, relation) pair satisfying `q`, best first: ascending
/// specificity, then service IRI, then relation IRI.
std::vector<MatchResult> listCandidates(const ServiceRegistry& registry,
                                        const SubQuery& q);

/// The first of listCandidates. Throws NoServiceFound.
MatchResult matchService(const ServiceRegistry& registry, const SubQuery& q);

}  // namespace smart

#endif  // SMART_MATCHER_HPP_
