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

#include "smart/executor.hpp"

#include <map>

#include "smart/path_expr.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

Iri Session::fresh() {
  return Iri("urn:smart:session:" + id_ + ":" + std::to_string(++counter_));
}

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::optional<Literal> makeLiteral(const std::string& text, Datatype type) {
  if (type == Datatype::kDecimal && !isDecimalLexical(text)) return std::nullopt;
  if (type == Datatype::kBoolean && !isBooleanLexical(text)) return std::nullopt;
  return Literal(text, type);
}

class OutputBuilder {
 public:
  OutputBuilder(const ServiceDescriptor& d, Session& session,
                const Graph& ontology, ResultGraph& out)
      : d_(d), session_(session), ontology_(ontology), out_(out) {}

  Iri buildRoot(const XmlNode& rootNode) {
    Iri root = session_.fresh();
    if (d_.rootOutput.typeClass)
      out_.triples.insert({root, vocab::rdfType, *d_.rootOutput.typeClass});
    fill(d_.rootOutput, root, rootNode);
    return root;
  }

 private:
  void fill(const ParameterNode& logical, const Iri& individual,
            const XmlNode& rootNode) {
    for (const ParameterNode& c : logical.children) {
      if (c.kind == ParameterKind::kSubLogicalOutput) {
        Iri sub = session_.fresh();
        if (c.typeClass) out_.triples.insert({sub, vocab::rdfType, *c.typeClass});
        if (c.fromObjectProperty)
          out_.triples.insert({individual, *c.fromObjectProperty, sub});
        fill(c, sub, rootNode);
      } else if (c.kind == ParameterKind::kRestOutput) {
        readLiteral(c, individual, rootNode);
      }
    }
  }

  // REST output paths are relative to the root output node.
  void readLiteral(const ParameterNode& rest, const Iri& individual,
                   const XmlNode& rootNode) {
    if (!rest.restOutputXPath || !rest.fromDataProperty) return;
    auto hits = evalPath(rootNode, parsePath(*rest.restOutputXPath), &rootNode);
    const std::string where =
        std::string(rest.iri.localName()) + " (" + *rest.restOutputXPath + ")";
    if (hits.empty()) {
      out_.warnings.push_back("no node for " + where);
      return;
    }
    if (hits.size() > 1)
      out_.warnings.push_back(std::to_string(hits.size()) + " nodes for " +
                              where + ", using the first");
    const std::string text = trim(hits.front()->text);
    auto lit = makeLiteral(text, dataPropertyType(ontology_, *rest.fromDataProperty));
    if (!lit) {
      out_.warnings.push_back("'" + text + "' does not fit the range of " +
                              rest.fromDataProperty->str());
      return;
    }
    out_.triples.insert({individual, *rest.fromDataProperty, *lit});
  }

  const ServiceDescriptor& d_;
  Session& session_;
  const Graph& ontology_;
  ResultGraph& out_;
};

}  // namespace

Iri buildSeed(const ServiceDescriptor& d, const std::vector<Binding>& bindings,
              const Graph& ontology, Session& session, Graph& out) {
  Iri seed = session.fresh();
  if (d.rootInput.typeClass)
    out.insert({seed, vocab::rdfType, *d.rootInput.typeClass});
  std::map<Iri, std::string> values;
  for (const Binding& b : bindings) values[b.paramIri] = b.value;
  for (const ParameterNode& v : d.variableInputs) {
    auto it = values.find(v.iri);
    if (it == values.end() || it->second.empty() || !v.fromDataProperty) continue;
    auto lit = makeLiteral(it->second, dataPropertyType(ontology, *v.fromDataProperty));
    if (!lit)
      throw Error("InvalidValue", "'" + it->second + "' is not valid for " + v.iri.str(),
                  {{"param", v.iri.str()}, {"value", it->second}});
    out.insert({seed, *v.fromDataProperty, *lit});
  }
  return seed;
}

ResultGraph buildOutputs(const ServiceDescriptor& d, const XmlNode& doc,
                         const Iri& inputIndividual, const Graph& inputGraph,
                         Session& session, const Graph& ontology,
                         bool inverted) {
  ResultGraph out;
  out.inputIndividual = inputIndividual;
  out.triples.insertAll(inputGraph);

  // resultXPath sees a document node above the root element, so "/" and
  // "/root/..." anchor at the root element and "Name" selects it by name.
  XmlNode document;
  document.children.push_back(doc);
  const XmlNode& rootElement = document.children.front();
  auto results = evalPath(document, parsePath(d.resultXPath), &rootElement);
  if (results.empty())
    out.warnings.push_back("resultXPath " + d.resultXPath + " matched nothing");

  const PathExpr rootPath = parsePath(d.rootOutput.rootOutputXPath.value_or("/"));
  OutputBuilder builder(d, session, ontology, out);
  for (const XmlNode* result : results) {
    for (const XmlNode* rootNode : evalPath(*result, rootPath, result)) {
      Iri root = builder.buildRoot(*rootNode);
      for (const IORelation& rel : d.ioRelations) {
        if (inverted)
          out.triples.insert({inputIndividual, rel.predicate, root});
        else
          out.triples.insert({root, rel.predicate, inputIndividual});
      }
      out.roots.push_back(root);
    }
  }
  out.stageRoots.push_back(out.roots);
  return out;
}

XmlNode parseResponseBody(const TransportResponse& response) {
  bool json = response.contentType.find("application/json") != std::string::npos;
  if (!json) {
    auto first = response.body.find_first_not_of(" \t\r\n");
    json = first != std::string::npos &&
           (response.body[first] == '{' || response.body[first] == '[');
  }
  return json ? jsonToXml(response.body) : parseXml(response.body);
}

namespace {

/// Literal of `property` on `individual` or, failing that, on its
/// sub-individuals reached through the descriptor's output tree.
std::optional<std::string> findValue(const Graph& g, const Iri& individual,
                                     const ParameterNode& logical,
                                     const Iri& property) {
  for (const Term& t : g.objects(individual, property))
    if (const auto* lit = std::get_if<Literal>(&t)) return lit->lexical();
  for (const ParameterNode& c : logical.children) {
    if (c.kind != ParameterKind::kSubLogicalOutput || !c.fromObjectProperty) continue;
    for (const Term& t : g.objects(individual, *c.fromObjectProperty)) {
      const auto* sub = std::get_if<Iri>(&t);
      if (sub == nullptr) continue;
      if (auto v = findValue(g, *sub, c, property)) return v;
    }
  }
  return std::nullopt;
}

ResultGraph invoke(const ServiceDescriptor& d, const MatchResult& match,
                   const std::vector<Binding>& bindings, const Iri& input,
                   const Graph& inputGraph, Transport& transport,
                   Session& session, const Graph& ontology,
                   const ExecutionOptions& options) {
  const std::string url = buildUrl(d, bindings, ontology);
  TransportResponse response = transport.get({url, options.timeoutMs});
  if (response.status < 200 || response.status >= 300)
    throw TransportError(url, response.status,
                         "service returned HTTP " + std::to_string(response.status));
  XmlNode doc = parseResponseBody(response);
  return buildOutputs(d, doc, input, inputGraph, session, ontology, match.inverted);
}

}  // namespace

ResultGraph executePlan(const ServiceRegistry& registry, const QueryPlan& plan,
                        const std::vector<Binding>& seedBindings,
                        Transport& transport, const std::string& sessionId,
                        const ExecutionOptions& options) {
  if (plan.stages.empty()) throw Error("EmptyPlan", "plan has no stages");
  const Graph& ontology = *registry.ontology;
  Session session(sessionId);

  // Stage 0 runs once from the seed individual.
  MatchResult match = matchService(registry, plan.stages[0]);
  const ServiceDescriptor* d = registry.find(match.service);
  Graph seedGraph;
  Iri seed = buildSeed(*d, seedBindings, ontology, session, seedGraph);
  ResultGraph result = invoke(*d, match, seedBindings, seed, seedGraph, transport,
                              session, ontology, options);
  result.inputIndividual = seed;

  for (std::size_t k = 1; k < plan.stages.size(); ++k) {
    const ServiceDescriptor* prev = d;
    match = matchService(registry, plan.stages[k]);
    d = registry.find(match.service);

    ResultGraph stage;
    std::string unmet;
    std::size_t invoked = 0;
    for (const Iri& root : result.roots) {
      std::vector<Binding> bindings;
      bool ok = true;
      for (const ParameterNode& v : d->variableInputs) {
        std::optional<std::string> value;
        if (v.fromDataProperty)
          value = findValue(result.triples, root, prev->rootOutput, *v.fromDataProperty);
        if (value && !value->empty()) {
          bindings.push_back({v.iri, *value});
        } else if (v.mandatory) {
          ok = false;
          unmet = v.iri.str();
          break;
        }
      }
      if (!ok) {
        result.warnings.push_back("stage " + std::to_string(k) + ": " +
                                  root.str() + " cannot supply " + unmet);
        continue;
      }
      ++invoked;
      ResultGraph part = invoke(*d, match, bindings, root, Graph{}, transport,
                                session, ontology, options);
      stage.triples.insertAll(part.triples);
      stage.roots.insert(stage.roots.end(), part.roots.begin(), part.roots.end());
      stage.warnings.insert(stage.warnings.end(), part.warnings.begin(),
                            part.warnings.end());
    }
    if (invoked == 0) {
      std::string param = unmet;
      if (param.empty() && !d->variableInputs.empty())
        param = d->variableInputs.front().iri.str();
      throw ChainBindingError(k, param.empty() ? d->iri.str() : param);
    }
    result.triples.insertAll(stage.triples);
    result.roots = stage.roots;
    result.stageRoots.push_back(stage.roots);
    result.warnings.insert(result.warnings.end(), stage.warnings.begin(),
                           stage.warnings.end());
  }
  return result;
}

}  // namespace smart
