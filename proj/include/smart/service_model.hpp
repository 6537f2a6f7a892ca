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

#ifndef SMART_SERVICE_MODEL_HPP_
#define SMART_SERVICE_MODEL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smart/graph.hpp"
#include "smart/term.hpp"

namespace smart {

enum class ParameterKind {
  kRootLogicalInput,
  kSubLogicalInput,
  kRootLogicalOutput,
  kSubLogicalOutput,
  kVariableRestInput,
  kStaticRestInput,
  kRestOutput,
};

std::string_view parameterKindName(ParameterKind k) noexcept;
bool isLogical(ParameterKind k) noexcept;

/// One node of a logical parameter tree. REST nodes are leaves.
struct ParameterNode {
  Iri iri;
  ParameterKind kind = ParameterKind::kVariableRestInput;
  std::optional<Iri> typeClass;
  std::optional<Iri> fromObjectProperty;
  std::optional<Iri> fromDataProperty;
  std::optional<std::string> parameterName;
  std::optional<std::string> parameterValue;
  bool mandatory = true;
  std::optional<std::string> rootOutputXPath;
  std::optional<std::string> restOutputXPath;
  /// Sorted by IRI.
  std::vector<ParameterNode> children;

  bool operator==(const ParameterNode&) const = default;
};

/// Ties the output-side logical node (subject) to the input-side logical node
/// (object) through a DomainObjectProperty.
struct IORelation {
  Iri iri;
  Iri subjectParam;
  Iri predicate;
  Iri objectParam;

  bool operator==(const IORelation&) const = default;
};

struct ServiceDescriptor {
  Iri iri;
  std::string endpoint;
  ParameterNode rootInput;
  ParameterNode rootOutput;
  std::vector<ParameterNode> staticInputs;
  /// Variable REST leaves of the root input tree, depth-first, IRI-sorted.
  std::vector<ParameterNode> variableInputs;
  /// REST output leaves of the root output tree, depth-first, IRI-sorted.
  std::vector<ParameterNode> restOutputs;
  std::string resultXPath;
  std::vector<IORelation> ioRelations;

  bool operator==(const ServiceDescriptor&) const = default;

  /// Logical node with the given IRI in either tree, or nullptr.
  const ParameterNode* findNode(const Iri& iri) const;
};

struct ValidationIssue {
  std::string code;
  std::string message;
  /// The offending node, relation or service.
  std::string element;
};

struct ValidationReport {
  Iri service;
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const noexcept { return errors.empty(); }
  std::string toText() const;
};

/// Services keyed by IRI plus the saturated graph they were read from.
struct ServiceRegistry {
  std::map<Iri, ServiceDescriptor> services;
  std::shared_ptr<const Graph> ontology;

  const ServiceDescriptor* find(const Iri& iri) const {
    auto it = services.find(iri);
    return it == services.end() ? nullptr : &it->second;
  }
};

/// Every violation of the descriptor invariants (errors) plus naming
/// convention and missing-relation warnings. Throws UnknownService when
/// `service` is not typed SISOService. Expects a saturated graph.
ValidationReport validateService(const Graph& graph, const Iri& service);

/// Validates and builds one descriptor; nullopt when the report has errors.
std::pair<std::optional<ServiceDescriptor>, ValidationReport> buildDescriptor(
    const Graph& graph, const Iri& service);

/// One descriptor per valid SISOService individual; every individual gets a
/// report, invalid ones are left out of the registry.
std::pair<ServiceRegistry, std::vector<ValidationReport>> extractRegistry(
    std::shared_ptr<const Graph> graph);

/// Service abbreviation used as the naming-convention prefix: the capitals
/// of the local name with a trailing "Service" dropped (GeoNamesSearch ->
/// GNS, GetOperatorService -> GO).
std::string serviceAbbreviation(std::string_view localName);

}  // namespace smart

#endif  // SMART_SERVICE_MODEL_HPP_
