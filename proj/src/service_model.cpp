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

#include "smart/service_model.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "smart/errors.hpp"
#include "smart/ontology.hpp"
#include "smart/path_expr.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

std::string_view parameterKindName(ParameterKind k) noexcept {
  switch (k) {
    case ParameterKind::kRootLogicalInput: return "rootLogicalInput";
    case ParameterKind::kSubLogicalInput: return "subLogicalInput";
    case ParameterKind::kRootLogicalOutput: return "rootLogicalOutput";
    case ParameterKind::kSubLogicalOutput: return "subLogicalOutput";
    case ParameterKind::kVariableRestInput: return "variableRestInput";
    case ParameterKind::kStaticRestInput: return "staticRestInput";
    case ParameterKind::kRestOutput: return "restOutput";
  }
  return "unknown";
}

bool isLogical(ParameterKind k) noexcept {
  return k == ParameterKind::kRootLogicalInput ||
         k == ParameterKind::kSubLogicalInput ||
         k == ParameterKind::kRootLogicalOutput ||
         k == ParameterKind::kSubLogicalOutput;
}

namespace {

const ParameterNode* findIn(const ParameterNode& node, const Iri& iri) {
  if (node.iri == iri) return &node;
  for (const auto& c : node.children)
    if (const auto* hit = findIn(c, iri)) return hit;
  return nullptr;
}

std::string_view suffixFor(ParameterKind k) {
  switch (k) {
    case ParameterKind::kRootLogicalInput: return "RLI";
    case ParameterKind::kSubLogicalInput: return "LI";
    case ParameterKind::kRootLogicalOutput: return "RLO";
    case ParameterKind::kSubLogicalOutput: return "LO";
    case ParameterKind::kVariableRestInput: return "RI";
    case ParameterKind::kStaticRestInput: return "SI";
    case ParameterKind::kRestOutput: return "RO";
  }
  return "";
}

bool validEndpoint(const std::string& url) {
  static const std::regex re(R"(^https?://[^\s/?#]+([/?#]\S*)?$)",
                             std::regex::icase);
  return std::regex_match(url, re);
}

/// Collects one service's structure from the saturated graph.
class Builder {
 public:
  Builder(const Graph& graph, const Iri& service)
      : g_(graph), service_(service) {
    report_.service = service;
  }

  ValidationReport& report() { return report_; }

  std::optional<ServiceDescriptor> build() {
    if (!hasType(g_, service_, vocab::SISOService))
      throw UnknownService(service_.str());
    abbreviation_ = serviceAbbreviation(service_.localName());

    ServiceDescriptor d;
    d.iri = service_;
    readEndpoint(d);
    readResultPath(d);

    auto rootIn = singleRoot(vocab::rootInputOf, vocab::RootInputParameter,
                             "RootInput", "root input");
    auto rootOut = singleRoot(vocab::rootOutputOf, vocab::RootOutputParameter,
                              "RootOutput", "root output");
    if (rootIn) {
      std::set<Iri> seen;
      d.rootInput = buildNode(*rootIn, ParameterKind::kRootLogicalInput, seen);
      collectLeaves(d.rootInput, ParameterKind::kVariableRestInput,
                    d.variableInputs);
    }
    if (rootOut) {
      std::set<Iri> seen;
      d.rootOutput =
          buildNode(*rootOut, ParameterKind::kRootLogicalOutput, seen);
      collectLeaves(d.rootOutput, ParameterKind::kRestOutput, d.restOutputs);
    }
    readStaticInputs(d);
    checkRestAttachment(d, rootIn.has_value(), rootOut.has_value());
    readRelations(d);

    if (!report_.ok()) return std::nullopt;
    return d;
  }

 private:
  void error(std::string code, std::string message, const std::string& element) {
    report_.errors.push_back({std::move(code), std::move(message), element});
  }
  void warning(std::string code, std::string message,
               const std::string& element) {
    report_.warnings.push_back({std::move(code), std::move(message), element});
  }

  std::vector<std::string> literals(const Iri& subject, const Iri& p) {
    std::vector<std::string> out;
    for (const Term& t : g_.objects(subject, p))
      if (const auto* lit = std::get_if<Literal>(&t))
        out.push_back(lit->lexical());
    return out;
  }

  std::vector<Iri> iris(const Term& subject, const Iri& p) {
    std::vector<Iri> out;
    for (const Term& t : g_.objects(subject, p))
      if (const auto* iri = std::get_if<Iri>(&t)) out.push_back(*iri);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// At most one literal value; more is an error.
  std::optional<std::string> single(const Iri& subject, const Iri& p,
                                    std::string_view what) {
    auto values = literals(subject, p);
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    if (values.size() > 1)
      error("Multiple" + std::string(what),
            "several " + std::string(what) + " values", subject.str());
    return values.front();
  }

  std::optional<Iri> singleIri(const Iri& subject, const Iri& p,
                               std::string_view what) {
    auto values = iris(subject, p);
    if (values.empty()) return std::nullopt;
    if (values.size() > 1)
      error("Multiple" + std::string(what),
            "several " + std::string(what) + " values", subject.str());
    return values.front();
  }

  void readEndpoint(ServiceDescriptor& d) {
    auto ep = single(service_, vocab::endpoint, "endpoint");
    if (!ep) {
      error("MissingEndpoint", "missing endpoint", service_.str());
      return;
    }
    if (!validEndpoint(*ep))
      error("InvalidEndpoint", "endpoint is not an absolute URL: " + *ep,
            service_.str());
    d.endpoint = *ep;
  }

  void checkPath(const std::string& path, const std::string& element) {
    try {
      parsePath(path);
    } catch (const Error& e) {
      error("InvalidPath", e.what(), element);
    }
  }

  void readResultPath(ServiceDescriptor& d) {
    auto rp = single(service_, vocab::resultXPath, "resultXPath");
    if (!rp) {
      warning("MissingResultXPath", "missing resultXPath, defaulting to \"/\"",
              service_.str());
      d.resultXPath = "/";
      return;
    }
    checkPath(*rp, service_.str());
    d.resultXPath = *rp;
  }

  std::optional<Iri> singleRoot(const Iri& rootOf, const Iri& rootClass,
                                const std::string& code,
                                const std::string& what) {
    std::vector<Iri> roots;
    for (const Term& t : g_.subjects(rootOf, service_)) {
      if (const auto* iri = std::get_if<Iri>(&t)) {
        roots.push_back(*iri);
      } else {
        error("Unnamed" + code, what + " must be a named individual",
              service_.str());
      }
    }
    std::sort(roots.begin(), roots.end());
    if (roots.empty()) {
      error("Missing" + code, "missing " + what, service_.str());
      return std::nullopt;
    }
    if (roots.size() > 1) {
      std::string names;
      for (const auto& r : roots) names += " " + std::string(r.localName());
      error("Multiple" + code + "s", "several " + what + "s:" + names,
            service_.str());
      return std::nullopt;
    }
    if (!hasType(g_, roots.front(), rootClass))
      error("Untyped" + code,
            what + " is not typed " + std::string(rootClass.localName()),
            roots.front().str());
    return roots.front();
  }

  /// Kind of a child node reached from a logical parent on the given side.
  std::optional<ParameterKind> childKind(const Iri& node, bool input) {
    bool rest = hasType(g_, node, vocab::RestParameter);
    bool logical = hasType(g_, node, vocab::LogicalParameter);
    if (rest && logical) {
      error("RestLogicalConflict",
            "node is typed both RestParameter and LogicalParameter",
            node.str());
      return std::nullopt;
    }
    if (input) {
      if (hasType(g_, node, vocab::StaticRestInputParameter))
        return ParameterKind::kStaticRestInput;
      if (hasType(g_, node, vocab::RestInputParameter))
        return ParameterKind::kVariableRestInput;
      if (hasType(g_, node, vocab::LogicalInputParameter))
        return ParameterKind::kSubLogicalInput;
    } else {
      if (hasType(g_, node, vocab::RestOutputParameter))
        return ParameterKind::kRestOutput;
      if (hasType(g_, node, vocab::LogicalOutputParameter))
        return ParameterKind::kSubLogicalOutput;
    }
    error("UntypedParameter",
          std::string("child of a logical ") + (input ? "input" : "output") +
              " node has no matching parameter class",
          node.str());
    return std::nullopt;
  }

  ParameterNode buildNode(const Iri& iri, ParameterKind kind,
                          std::set<Iri>& seen) {
    ParameterNode n;
    n.iri = iri;
    n.kind = kind;
    seen.insert(iri);
    lintName(iri, suffixFor(kind));

    switch (kind) {
      case ParameterKind::kRootLogicalInput:
      case ParameterKind::kSubLogicalInput:
      case ParameterKind::kRootLogicalOutput:
      case ParameterKind::kSubLogicalOutput: {
        if (hasType(g_, iri, vocab::RestParameter))
          error("RestLogicalConflict",
                "node is typed both RestParameter and LogicalParameter",
                iri.str());
        n.typeClass = singleIri(iri, vocab::type, "type");
        if (!n.typeClass)
          warning("MissingType", "logical node has no type", iri.str());
        bool sub = kind == ParameterKind::kSubLogicalInput ||
                   kind == ParameterKind::kSubLogicalOutput;
        n.fromObjectProperty =
            singleIri(iri, vocab::fromObjectProperty, "fromObjectProperty");
        if (sub && !n.fromObjectProperty)
          error("MissingFromObjectProperty", "missing fromObjectProperty",
                iri.str());
        if (kind == ParameterKind::kRootLogicalOutput) {
          n.rootOutputXPath =
              single(iri, vocab::rootOutputXPath, "rootOutputXPath");
          if (!n.rootOutputXPath)
            error("MissingRootOutputXPath", "missing rootOutputXPath",
                  iri.str());
          else
            checkPath(*n.rootOutputXPath, iri.str());
        }
        bool input = kind == ParameterKind::kRootLogicalInput ||
                     kind == ParameterKind::kSubLogicalInput;
        for (const Term& t :
             g_.objects(iri, input ? vocab::toInput : vocab::toOutput)) {
          const auto* child = std::get_if<Iri>(&t);
          if (child == nullptr) {
            error("UnnamedParameter", "parameter nodes must be named",
                  iri.str());
            continue;
          }
          if (seen.count(*child) != 0) {
            error("ParameterCycle",
                  "parameter tree revisits " + std::string(child->localName()),
                  iri.str());
            continue;
          }
          auto ck = childKind(*child, input);
          if (!ck) continue;
          n.children.push_back(buildNode(*child, *ck, seen));
        }
        std::sort(n.children.begin(), n.children.end(),
                  [](const ParameterNode& a, const ParameterNode& b) {
                    return a.iri < b.iri;
                  });
        break;
      }
      case ParameterKind::kVariableRestInput:
      case ParameterKind::kStaticRestInput:
        readRestInput(n);
        break;
      case ParameterKind::kRestOutput:
        n.fromDataProperty =
            singleIri(iri, vocab::fromDataProperty, "fromDataProperty");
        if (!n.fromDataProperty)
          error("MissingFromDataProperty", "missing fromDataProperty",
                iri.str());
        n.restOutputXPath =
            single(iri, vocab::restOutputXPath, "restOutputXPath");
        if (!n.restOutputXPath)
          error("MissingRestOutputXPath", "missing restOutputXPath", iri.str());
        else
          checkPath(*n.restOutputXPath, iri.str());
        break;
    }
    return n;
  }

  void readRestInput(ParameterNode& n) {
    const Iri& iri = n.iri;
    n.parameterName = single(iri, vocab::parameterName, "parameterName");
    if (!n.parameterName || n.parameterName->empty())
      error("MissingParameterName", "missing parameterName", iri.str());
    n.fromDataProperty =
        singleIri(iri, vocab::fromDataProperty, "fromDataProperty");
    if (auto m = single(iri, vocab::mandatory, "mandatory")) {
      if (*m == "true" || *m == "1") {
        n.mandatory = true;
      } else if (*m == "false" || *m == "0") {
        n.mandatory = false;
      } else {
        error("InvalidMandatory", "mandatory is not a boolean: " + *m,
              iri.str());
      }
    }
    if (n.kind == ParameterKind::kStaticRestInput) {
      n.parameterValue = single(iri, vocab::parameterValue, "parameterValue");
      if (!n.parameterValue)
        error("MissingParameterValue", "missing parameterValue", iri.str());
    } else if (!n.fromDataProperty) {
      error("MissingFromDataProperty", "missing fromDataProperty", iri.str());
    }
  }

  static void collectLeaves(const ParameterNode& node, ParameterKind kind,
                            std::vector<ParameterNode>& out) {
    for (const auto& c : node.children) {
      if (c.kind == kind) out.push_back(c);
      collectLeaves(c, kind, out);
    }
  }

  static void collectStatic(const ParameterNode& node,
                            std::map<Iri, ParameterNode>& out) {
    for (const auto& c : node.children) {
      if (c.kind == ParameterKind::kStaticRestInput) out.emplace(c.iri, c);
      collectStatic(c, out);
    }
  }

  /// Static inputs may hang off the service alone; they need no logical
  /// parent because the user never supplies them.
  void readStaticInputs(ServiceDescriptor& d) {
    std::map<Iri, ParameterNode> statics;
    collectStatic(d.rootInput, statics);
    for (const Iri& r : iris(service_, vocab::hasRestInput)) {
      if (statics.count(r) != 0) continue;
      if (!hasType(g_, r, vocab::StaticRestInputParameter)) continue;
      if (hasType(g_, r, vocab::LogicalParameter))
        error("RestLogicalConflict",
              "node is typed both RestParameter and LogicalParameter",
              r.str());
      ParameterNode n;
      n.iri = r;
      n.kind = ParameterKind::kStaticRestInput;
      lintName(r, "SI");
      readRestInput(n);
      statics.emplace(r, std::move(n));
    }
    for (auto& [iri, node] : statics) d.staticInputs.push_back(node);
  }

  void checkRestAttachment(const ServiceDescriptor& d, bool haveIn,
                           bool haveOut) {
    if (haveIn) {
      for (const Iri& r : iris(service_, vocab::hasRestInput)) {
        if (hasType(g_, r, vocab::StaticRestInputParameter)) continue;
        if (findIn(d.rootInput, r) == nullptr)
          error("UnreachableRestInput",
                "variable REST input is not reachable from the root input",
                r.str());
      }
      for (const auto& v : d.variableInputs)
        if (!g_.contains({v.iri, vocab::restInputOf, service_}))
          warning("DetachedRestInput",
                  "REST input is not declared restInputOf the service",
                  v.iri.str());
    }
    if (haveOut) {
      for (const Iri& r : iris(service_, vocab::hasRestOutput))
        if (findIn(d.rootOutput, r) == nullptr)
          error("UnreachableRestOutput",
                "REST output is not reachable from the root output", r.str());
    }
  }

  void readRelations(ServiceDescriptor& d) {
    for (const Iri& rel : iris(service_, vocab::hasIORelation)) {
      lintName(rel, "IORel");
      auto subj = singleIri(rel, vocab::subject, "subject");
      auto pred = singleIri(rel, vocab::predicate, "predicate");
      auto obj = singleIri(rel, vocab::object, "object");
      bool ok = true;
      if (!subj) {
        error("MissingSubject", "IO relation has no subject", rel.str());
        ok = false;
      }
      if (!pred) {
        error("MissingPredicate", "IO relation has no predicate", rel.str());
        ok = false;
      }
      if (!obj) {
        error("MissingObject", "IO relation has no object", rel.str());
        ok = false;
      }
      if (!ok) continue;
      if (!hasType(g_, *pred, vocab::DomainObjectProperty))
        error("InvalidPredicate",
              "IO relation predicate is not a DomainObjectProperty",
              rel.str());
      const auto* s = findIn(d.rootOutput, *subj);
      if (s == nullptr || !isLogical(s->kind))
        error("InvalidSubject",
              "IO relation subject is not a logical output of the service",
              rel.str());
      const auto* o = findIn(d.rootInput, *obj);
      if (o == nullptr || !isLogical(o->kind))
        error("InvalidObject",
              "IO relation object is not a logical input of the service",
              rel.str());
      d.ioRelations.push_back({rel, *subj, *pred, *obj});
    }
    if (d.ioRelations.empty() &&
        g_.objects(service_, vocab::hasIORelation).empty())
      warning("MissingIORelation", "service has no hasIORelation",
              service_.str());
  }

  void lintName(const Iri& iri, std::string_view suffix) {
    std::string local(iri.localName());
    auto first = local.find('_');
    auto last = local.rfind('_');
    std::string prefix = first == std::string::npos ? "" : local.substr(0, first);
    std::string tail = last == std::string::npos ? "" : local.substr(last + 1);
    if (prefix != abbreviation_)
      warning("NamingPrefix", "prefix does not match " + abbreviation_,
              iri.str());
    if (tail != suffix)
      warning("NamingSuffix", "suffix does not match " + std::string(suffix),
              iri.str());
  }

  const Graph& g_;
  Iri service_;
  std::string abbreviation_;
  ValidationReport report_;
};

}  // namespace

const ParameterNode* ServiceDescriptor::findNode(const Iri& node) const {
  if (const auto* hit = findIn(rootInput, node)) return hit;
  return findIn(rootOutput, node);
}

std::string ValidationReport::toText() const {
  std::ostringstream out;
  out << service.str() << ": " << errors.size() << " error(s), "
      << warnings.size() << " warning(s)\n";
  for (const auto& e : errors)
    out << "  error " << e.code << " at " << e.element << ": " << e.message
        << "\n";
  for (const auto& w : warnings)
    out << "  warning " << w.code << " at " << w.element << ": " << w.message
        << "\n";
  return out.str();
}

std::string serviceAbbreviation(std::string_view localName) {
  std::string_view name = localName;
  constexpr std::string_view kTail = "Service";
  if (name.size() > kTail.size() && name.ends_with(kTail))
    name.remove_suffix(kTail.size());
  std::string out;
  for (char c : name)
    if (c >= 'A' && c <= 'Z') out.push_back(c);
  return out;
}

ValidationReport validateService(const Graph& graph, const Iri& service) {
  Builder b(graph, service);
  b.build();
  return std::move(b.report());
}

std::pair<std::optional<ServiceDescriptor>, ValidationReport> buildDescriptor(
    const Graph& graph, const Iri& service) {
  Builder b(graph, service);
  auto d = b.build();
  return {std::move(d), std::move(b.report())};
}

std::pair<ServiceRegistry, std::vector<ValidationReport>> extractRegistry(
    std::shared_ptr<const Graph> graph) {
  ServiceRegistry registry;
  registry.ontology = graph;
  std::vector<ValidationReport> reports;
  std::vector<Iri> services;
  for (const Term& t : graph->subjects(vocab::rdfType, vocab::SISOService))
    if (const auto* iri = std::get_if<Iri>(&t)) services.push_back(*iri);
  std::sort(services.begin(), services.end());
  for (const Iri& s : services) {
    auto [d, report] = buildDescriptor(*graph, s);
    if (d) registry.services.emplace(s, std::move(*d));
    reports.push_back(std::move(report));
  }
  return {std::move(registry), std::move(reports)};
}

}  // namespace smart
