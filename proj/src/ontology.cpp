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

#include "smart/ontology.hpp"

#include <algorithm>
#include <cctype>

#include "smart/errors.hpp"
#include "smart/turtle.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

Graph loadOntology(std::string_view turtle, const SaturationOptions& options) {
  Graph g = vocab::axioms();
  parseInto(g, turtle);
  return saturate(std::move(g), {}, options);
}

bool isSubClassOf(const Graph& graph, const Iri& c, const Iri& d) {
  if (c == d || d == vocab::DomainThing) return true;
  return graph.contains({c, vocab::subClassOf, d});
}

bool hasType(const Graph& graph, const Term& individual, const Iri& cls) {
  return graph.contains({individual, vocab::rdfType, cls});
}

namespace {

std::set<Iri> iriObjects(const Graph& graph, const Iri& s, const Iri& p) {
  std::set<Iri> out;
  for (const Term& t : graph.objects(s, p))
    if (const auto* iri = std::get_if<Iri>(&t)) out.insert(*iri);
  return out;
}

std::set<Iri> iriSubjects(const Graph& graph, const Iri& p, const Iri& o) {
  std::set<Iri> out;
  for (const Term& t : graph.subjects(p, o))
    if (const auto* iri = std::get_if<Iri>(&t)) out.insert(*iri);
  return out;
}

std::set<Iri> equivalenceClass(const Graph& graph, const Iri& p) {
  std::set<Iri> out = iriObjects(graph, p, vocab::equivalentProperty);
  out.insert(p);
  return out;
}

}  // namespace

PredicateSynonyms predicateSynonyms(const Graph& graph, const Iri& p) {
  PredicateSynonyms out;
  out.equivalents = equivalenceClass(graph, p);
  out.forward = out.equivalents;
  for (const Iri& m : out.equivalents)
    for (const Iri& sub : iriSubjects(graph, vocab::subPropertyOf, m))
      out.forward.insert(sub);
  for (const Iri& f : out.forward)
    for (const Iri& partner : iriObjects(graph, f, vocab::inverseOf))
      for (const Iri& q : equivalenceClass(graph, partner)) out.inverse.insert(q);
  return out;
}

std::string normalizeLabel(std::string_view text) {
  std::string out;
  bool pendingSpace = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pendingSpace = !out.empty();
      continue;
    }
    if (pendingSpace) out.push_back(' ');
    pendingSpace = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<std::string> labelsOf(const Graph& graph, const Iri& iri) {
  std::vector<std::string> out;
  for (const Term& t : graph.objects(iri, vocab::label))
    if (const auto* lit = std::get_if<Literal>(&t)) out.push_back(lit->lexical());
  return out;
}

std::optional<std::string> preferredLabel(const Graph& graph, const Iri& iri) {
  auto labels = labelsOf(graph, iri);
  if (labels.empty()) return std::nullopt;
  return *std::min_element(labels.begin(), labels.end());
}

LabelIndex::LabelIndex(const Graph& graph) {
  for (const Triple& t : graph.match(std::nullopt, vocab::label, std::nullopt)) {
    const auto* iri = std::get_if<Iri>(&t.subject);
    const auto* lit = std::get_if<Literal>(&t.object);
    if (iri == nullptr || lit == nullptr) continue;
    std::string key = normalizeLabel(lit->lexical());
    if (key.empty()) continue;
    if (hasType(graph, *iri, vocab::DomainClass)) classes_[key].insert(*iri);
    bool objectProp = hasType(graph, *iri, vocab::DomainObjectProperty);
    if (objectProp || hasType(graph, *iri, vocab::DomainDataProperty))
      predicates_[key].insert(*iri);
    if (objectProp) objectProperties_.insert(*iri);
  }
}

std::set<Iri> LabelIndex::candidates(const std::string& normalized,
                                     LabelKind kind) const {
  const auto& index = kind == LabelKind::kClass ? classes_ : predicates_;
  auto it = index.find(normalized);
  return it == index.end() ? std::set<Iri>{} : it->second;
}

std::set<Iri> LabelIndex::lookup(std::string_view phrase,
                                 LabelKind kind) const {
  const std::string normalized = normalizeLabel(phrase);
  if (normalized.empty()) return {};
  std::set<Iri> found = candidates(normalized, kind);
  if (found.empty() && normalized.size() > 1 && normalized.back() == 's')
    found = candidates(normalized.substr(0, normalized.size() - 1), kind);
  return found;
}

Iri LabelIndex::resolve(std::string_view phrase, LabelKind kind) const {
  const std::string normalized = normalizeLabel(phrase);
  if (normalized.empty()) throw UnknownLabel(std::string(phrase), 0);

  std::set<Iri> found = lookup(normalized, kind);
  if (found.empty()) throw UnknownLabel(normalized, 0);
  if (found.size() > 1) {
    std::string names;
    for (const Iri& iri : found) {
      if (!names.empty()) names += ", ";
      names += iri.str();
    }
    throw AmbiguousLabel(normalized, names);
  }
  return *found.begin();
}

Iri resolveLabel(const Graph& graph, std::string_view phrase, LabelKind kind) {
  return LabelIndex(graph).resolve(phrase, kind);
}

}  // namespace smart
