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

#ifndef SMART_ONTOLOGY_HPP_
#define SMART_ONTOLOGY_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smart/graph.hpp"
#include "smart/reasoner.hpp"
#include "smart/term.hpp"

namespace smart {

/// Axioms + parsed Turtle document, saturated. Throws ParseError.
Graph loadOntology(std::string_view turtle,
                   const SaturationOptions& options = {});

/// True iff c == d, (c subClassOf d) holds, or d is DomainThing.
/// Expects a saturated graph.
bool isSubClassOf(const Graph& graph, const Iri& c, const Iri& d);

bool hasType(const Graph& graph, const Term& individual, const Iri& cls);

struct PredicateSynonyms {
  /// p and its equivalentProperty class.
  std::set<Iri> equivalents;
  /// equivalents plus every subproperty of a member.
  std::set<Iri> forward;
  /// inverseOf partners of forward members, with their equivalence classes.
  std::set<Iri> inverse;
};

PredicateSynonyms predicateSynonyms(const Graph& graph, const Iri& p);

enum class LabelKind { kClass, kPredicate };

/// Lowercase, trimmed, internal whitespace runs collapsed to one space.
std::string normalizeLabel(std::string_view text);

/// rdfs:label values of `iri`, in insertion order.
std::vector<std::string> labelsOf(const Graph& graph, const Iri& iri);
/// Smallest label by byte order, for deterministic display.
std::optional<std::string> preferredLabel(const Graph& graph, const Iri& iri);

/// Normalized-label lookup over the DomainClass and DomainProperty terms of
/// one graph snapshot.
class LabelIndex {
 public:
  explicit LabelIndex(const Graph& graph);

  /// Exact normalized match first, then the phrase with one trailing "s"
  /// stripped. Throws UnknownLabel or AmbiguousLabel.
  Iri resolve(std::string_view phrase, LabelKind kind) const;

  /// Non-throwing form of resolve: every candidate at the first tier that
  /// has any.
  std::set<Iri> lookup(std::string_view phrase, LabelKind kind) const;

  bool isObjectProperty(const Iri& iri) const {
    return objectProperties_.count(iri) != 0;
  }

 private:
  std::set<Iri> candidates(const std::string& normalized, LabelKind kind) const;

  std::map<std::string, std::set<Iri>> classes_;
  std::map<std::string, std::set<Iri>> predicates_;
  std::set<Iri> objectProperties_;
};

Iri resolveLabel(const Graph& graph, std::string_view phrase, LabelKind kind);

}  // namespace smart

#endif  // SMART_ONTOLOGY_HPP_
