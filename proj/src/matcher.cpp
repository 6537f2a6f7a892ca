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

#include "smart/matcher.hpp"

#include <algorithm>

#include "smart/ontology.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

std::optional<int> typeRank(const Graph& graph, const std::optional<Iri>& node,
                            const std::optional<Iri>& query) {
  if (!query || *query == vocab::DomainThing) return 0;
  if (!node) return std::nullopt;
  if (*node == *query) return 0;
  if (!isSubClassOf(graph, *node, *query)) return std::nullopt;
  int steps = 0;
  for (const Term& t : graph.objects(*node, vocab::subClassOf)) {
    const auto* e = std::get_if<Iri>(&t);
    if (e == nullptr || *e == *node) continue;
    if (*e == *query || graph.contains({*e, vocab::subClassOf, *query})) ++steps;
  }
  return std::max(steps, 1);
}

namespace {

/// True when `r` is an inverse partner of one of `equivalents`, directly or
/// through r's own equivalence class.
bool inverseOfEquivalent(const Graph& graph, const Iri& r,
                         const std::set<Iri>& equivalents) {
  for (const Iri& alias : predicateSynonyms(graph, r).equivalents)
    for (const Term& t : graph.objects(alias, vocab::inverseOf))
      if (const auto* partner = std::get_if<Iri>(&t))
        if (equivalents.count(*partner) != 0) return true;
  return false;
}

std::optional<Iri> nodeType(const ServiceDescriptor& d, const Iri& node) {
  const ParameterNode* n = d.findNode(node);
  return n == nullptr ? std::nullopt : n->typeClass;
}

}  // namespace

std::vector<MatchResult> listCandidates(const ServiceRegistry& registry,
                                        const SubQuery& q) {
  std::vector<MatchResult> out;
  if (!registry.ontology) return out;
  const Graph& g = *registry.ontology;
  const PredicateSynonyms syn = predicateSynonyms(g, q.predicate);

  for (const auto& [iri, d] : registry.services) {
    for (const IORelation& rel : d.ioRelations) {
      const auto outType = nodeType(d, rel.subjectParam);
      const auto inType = nodeType(d, rel.objectParam);
      if (syn.forward.count(rel.predicate) != 0) {
        auto in = typeRank(g, inType, q.inputType);
        auto outR = typeRank(g, outType, q.outputType);
        if (in && outR) {
          int pr = syn.equivalents.count(rel.predicate) != 0 ? 0 : 1;
          out.push_back({iri, rel, {pr, *in, *outR}, false});
        }
      }
      if (syn.inverse.count(rel.predicate) != 0) {
        auto in = typeRank(g, outType, q.inputType);
        auto outR = typeRank(g, inType, q.outputType);
        if (in && outR) {
          int pr = inverseOfEquivalent(g, rel.predicate, syn.equivalents) ? 1 : 2;
          out.push_back({iri, rel, {pr, *in, *outR}, true});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MatchResult& a, const MatchResult& b) {
    if (a.specificity != b.specificity) return a.specificity < b.specificity;
    if (a.service != b.service) return a.service < b.service;
    if (a.relation.iri != b.relation.iri) return a.relation.iri < b.relation.iri;
    return a.inverted < b.inverted;
  });
  return out;
}

MatchResult matchService(const ServiceRegistry& registry, const SubQuery& q) {
  auto all = listCandidates(registry, q);
  if (all.empty()) throw NoServiceFound(q);
  return all.front();
}

}  // namespace smart
