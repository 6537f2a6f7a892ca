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

#ifndef SMART_EXECUTOR_HPP_
#define SMART_EXECUTOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smart/errors.hpp"
#include "smart/graph.hpp"
#include "smart/matcher.hpp"
#include "smart/query.hpp"
#include "smart/service_model.hpp"
#include "smart/transport.hpp"
#include "smart/xml.hpp"

namespace smart {

struct Binding {
  Iri paramIri;
  std::string value;
};

struct FormField {
  Iri paramIri;
  std::string label;
  Datatype valueType = Datatype::kString;
  bool mandatory = true;
  std::vector<std::string> pathLabels;
};

struct FormSpec {
  Iri serviceIri;
  std::string title;
  std::vector<FormField> fields;
};

/// Declared rdfs:range of a data property; string when absent or unknown.
Datatype dataPropertyType(const Graph& graph, const Iri& property);

/// One field per variable REST input, in descriptor order.
FormSpec formSpecFor(const ServiceDescriptor& d, const Graph& graph);

/// RFC 3986 percent-encoding; only ALPHA / DIGIT / "-._~" pass through.
std::string percentEncode(std::string_view s);

/// Endpoint plus static then variable parameters, each group sorted by
/// parameterName. Throws Error("MissingMandatoryInput") or
/// Error("InvalidValue"), both naming the paramIri.
std::string buildUrl(const ServiceDescriptor& d,
                     const std::vector<Binding>& bindings, const Graph& graph);

/// Hands out `urn:smart:session:{id}:{n}` IRIs.
class Session {
 public:
  explicit Session(std::string id) : id_(std::move(id)) {}
  Iri fresh();
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
  std::uint64_t counter_ = 0;
};

struct ResultGraph {
  Graph triples;
  /// Root individuals of the last stage, in response order.
  std::vector<Iri> roots;
  /// Roots of every stage; stageRoots.back() == roots.
  std::vector<std::vector<Iri>> stageRoots;
  Iri inputIndividual;
  std::vector<std::string> warnings;
};

/// Seed individual typed with the root input class, carrying one data
/// property triple per bound variable input.
Iri buildSeed(const ServiceDescriptor& d, const std::vector<Binding>& bindings,
              const Graph& ontology, Session& session, Graph& out);

/// Response document to output individuals. `inverted` reverses the
/// direction of the IO-relation links.
ResultGraph buildOutputs(const ServiceDescriptor& d, const XmlNode& doc,
                         const Iri& inputIndividual, const Graph& inputGraph,
                         Session& session, const Graph& ontology,
                         bool inverted = false);

/// JSON when the content type says so or the body starts with '{' or '[',
/// XML otherwise.
XmlNode parseResponseBody(const TransportResponse& response);

class ChainBindingError : public Error {
 public:
  ChainBindingError(std::size_t stage, const std::string& param)
      : Error("ChainBindingError",
              "stage " + std::to_string(stage) +
                  ": no previous output supplies " + param,
              {{"stage", std::to_string(stage)}, {"param", param}}) {}
};

struct ExecutionOptions {
  int timeoutMs = 10000;
};

/// Runs every stage of `plan`, fanning out over the previous stage's roots.
ResultGraph executePlan(const ServiceRegistry& registry, const QueryPlan& plan,
                        const std::vector<Binding>& seedBindings,
                        Transport& transport, const std::string& sessionId,
                        const ExecutionOptions& options = {});

}  // namespace smart

#endif  // SMART_EXECUTOR_HPP_
