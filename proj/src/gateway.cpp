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

#include "smart/gateway.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include <httplib.h>

#include "smart/matcher.hpp"
#include "smart/ontology.hpp"
#include "smart/turtle.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

namespace {

Json optIri(const std::optional<Iri>& iri) {
  return iri ? Json(iri->str()) : Json(nullptr);
}

Json labelOf(const Graph& g, const std::optional<Iri>& iri) {
  if (!iri) return nullptr;
  auto l = preferredLabel(g, *iri);
  return l ? Json(*l) : Json(std::string(iri->localName()));
}

Json nodeJson(const ParameterNode& n) {
  Json j;
  j["iri"] = n.iri.str();
  j["kind"] = std::string(parameterKindName(n.kind));
  if (n.typeClass) j["type"] = n.typeClass->str();
  if (n.fromObjectProperty) j["fromObjectProperty"] = n.fromObjectProperty->str();
  if (n.fromDataProperty) j["fromDataProperty"] = n.fromDataProperty->str();
  if (n.parameterName) j["parameterName"] = *n.parameterName;
  if (n.parameterValue) j["parameterValue"] = *n.parameterValue;
  if (n.kind == ParameterKind::kVariableRestInput ||
      n.kind == ParameterKind::kStaticRestInput)
    j["mandatory"] = n.mandatory;
  if (n.rootOutputXPath) j["rootOutputXPath"] = *n.rootOutputXPath;
  if (n.restOutputXPath) j["restOutputXPath"] = *n.restOutputXPath;
  if (isLogical(n.kind)) {
    j["children"] = Json::array();
    for (const auto& c : n.children) j["children"].push_back(nodeJson(c));
  }
  return j;
}

Json matchJson(std::size_t stage, const MatchResult& m) {
  return {{"stage", stage},
          {"service", m.service.str()},
          {"relation", m.relation.iri.str()},
          {"predicate", m.relation.predicate.str()},
          {"rank",
           {{"predicate", m.specificity.predicateRank},
            {"input", m.specificity.inputRank},
            {"output", m.specificity.outputRank}}},
          {"inverted", m.inverted}};
}

std::string text(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return iri->str();
  if (const auto* lit = std::get_if<Literal>(&t)) return lit->lexical();
  return toString(t);
}

}  // namespace

Json toJson(const FormSpec& spec) {
  Json fields = Json::array();
  for (const auto& f : spec.fields)
    fields.push_back({{"paramIri", f.paramIri.str()},
                      {"label", f.label},
                      {"valueType", std::string(datatypeName(f.valueType))},
                      {"mandatory", f.mandatory},
                      {"pathLabels", f.pathLabels}});
  return {{"serviceIri", spec.serviceIri.str()},
          {"title", spec.title},
          {"fields", fields}};
}

Json toJson(const ValidationReport& report) {
  auto issues = [](const std::vector<ValidationIssue>& list) {
    Json out = Json::array();
    for (const auto& i : list)
      out.push_back({{"code", i.code}, {"message", i.message}, {"element", i.element}});
    return out;
  };
  return {{"service", report.service.str()},
          {"ok", report.ok()},
          {"errors", issues(report.errors)},
          {"warnings", issues(report.warnings)}};
}

Json toJson(const ServiceDescriptor& d) {
  Json j;
  j["iri"] = d.iri.str();
  j["endpoint"] = d.endpoint;
  j["resultXPath"] = d.resultXPath;
  j["rootInput"] = nodeJson(d.rootInput);
  j["rootOutput"] = nodeJson(d.rootOutput);
  j["staticInputs"] = Json::array();
  for (const auto& s : d.staticInputs) j["staticInputs"].push_back(nodeJson(s));
  j["variableInputs"] = Json::array();
  for (const auto& v : d.variableInputs) j["variableInputs"].push_back(v.iri.str());
  j["restOutputs"] = Json::array();
  for (const auto& r : d.restOutputs) j["restOutputs"].push_back(r.iri.str());
  j["ioRelations"] = Json::array();
  for (const auto& rel : d.ioRelations)
    j["ioRelations"].push_back({{"iri", rel.iri.str()},
                                {"subject", rel.subjectParam.str()},
                                {"predicate", rel.predicate.str()},
                                {"object", rel.objectParam.str()}});
  return j;
}

Json planToJson(const QueryPlan& plan, const Graph& graph) {
  Json stages = Json::array();
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    const SubQuery& q = plan.stages[i];
    stages.push_back({{"index", i},
                      {"inputType", optIri(q.inputType)},
                      {"inputLabel", labelOf(graph, q.inputType)},
                      {"predicate", q.predicate.str()},
                      {"predicateLabel", labelOf(graph, q.predicate)},
                      {"outputType", optIri(q.outputType)},
                      {"outputLabel", labelOf(graph, q.outputType)}});
  }
  return {{"seedType", plan.seedType.str()},
          {"seedLabel", labelOf(graph, plan.seedType)},
          {"stages", stages}};
}

Json executeResponse(const ResultGraph& result, const Graph& graph) {
  // Individuals in order of first appearance as a subject.
  std::vector<Iri> order;
  std::set<Iri> seen;
  for (const Triple& t : result.triples.triples()) {
    const auto* s = std::get_if<Iri>(&t.subject);
    if (s != nullptr && seen.insert(*s).second) order.push_back(*s);
  }

  Json nodes = Json::array();
  Json geo = Json::array();
  for (const Iri& id : order) {
    std::set<Iri> types;
    std::map<std::string, std::vector<std::string>> literals;
    Json links = Json::array();
    for (const Triple& t : result.triples.match(id, std::nullopt, std::nullopt)) {
      if (t.predicate == vocab::rdfType) {
        if (const auto* c = std::get_if<Iri>(&t.object)) types.insert(*c);
      } else if (isLiteral(t.object)) {
        literals[t.predicate.str()].push_back(text(t.object));
      } else {
        links.push_back({{"predicate", t.predicate.str()}, {"targetId", text(t.object)}});
      }
    }
    Json lits = Json::object();
    for (auto& [p, values] : literals) {
      std::sort(values.begin(), values.end());
      lits[p] = values;
    }
    Json node = {{"id", id.str()},
                 {"type", types.empty() ? Json(nullptr) : Json(types.begin()->str())},
                 {"literals", lits},
                 {"links", links}};
    nodes.push_back(node);

    auto lat = literals.find(vocab::ont("latitude").str());
    auto lng = literals.find(vocab::ont("longitude").str());
    if (lat != literals.end() && lng != literals.end()) {
      std::string label;
      auto name = literals.find(vocab::ont("name").str());
      if (name != literals.end()) {
        label = name->second.front();
      } else if (!types.empty()) {
        auto l = preferredLabel(graph, *types.begin());
        label = l ? *l : std::string(types.begin()->localName());
      } else {
        label = id.str();
      }
      geo.push_back({{"id", id.str()},
                     {"lat", std::stod(lat->second.front())},
                     {"lng", std::stod(lng->second.front())},
                     {"label", label}});
    }
  }
  Json roots = Json::array();
  for (const Iri& r : result.roots) roots.push_back(r.str());
  return {{"nodes", nodes}, {"roots", roots}, {"geo", geo}, {"warnings", result.warnings}};
}

Json errorBody(const Error& e) {
  Json context = Json::object();
  for (const auto& [k, v] : e.context()) context[k] = v;
  return {{"code", e.code()}, {"message", e.what()}, {"context", context}};
}

int statusFor(const std::string& code) {
  static const std::map<std::string, int> kStatus = {
      {"ParseError", 400},          {"InvalidRequest", 400},
      {"MissingFind", 400},         {"MissingThis", 400},
      {"MultipleThis", 400},        {"MissingClass", 400},
      {"EmptyPlan", 400},           {"UnknownLabel", 400},
      {"AmbiguousLabel", 400},      {"MissingMandatoryInput", 400},
      {"InvalidValue", 400},        {"ChainBindingError", 400},
      {"MalformedTriple", 400},     {"NoServiceFound", 404},
      {"UnknownService", 404},      {"TransportError", 502},
      {"ResponseParseError", 502},  {"InvalidJson", 502},
      {"ValidationFailed", 422},    {"SaturationBudgetExceeded", 422},
  };
  auto it = kStatus.find(code);
  return it == kStatus.end() ? 500 : it->second;
}

Iri bindingKey(const std::string& key) {
  if (!key.empty() && key.front() == ':') return vocab::ont(key.substr(1));
  return Iri(key);
}

namespace {

ApiResponse failure(const Error& e) { return {statusFor(e.code()), errorBody(e)}; }

ApiResponse internalError(const std::exception& e) {
  return {500, {{"code", "InternalError"}, {"message", e.what()}, {"context", Json::object()}}};
}

template <typename Fn>
ApiResponse guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return failure(e);
  } catch (const std::exception& e) {
    return internalError(e);
  }
}

}  // namespace

Gateway::Gateway(std::string_view turtle, std::shared_ptr<Transport> transport,
                 GatewayOptions options)
    : transport_(std::move(transport)), options_(std::move(options)) {
  auto base = std::make_shared<Graph>();
  parseInto(*base, turtle);
  snapshot_ = buildSnapshot(std::move(base));
}

std::shared_ptr<const Snapshot> Gateway::buildSnapshot(
    std::shared_ptr<const Graph> base) const {
  auto snap = std::make_shared<Snapshot>();
  snap->base = base;
  Graph g = vocab::axioms();
  g.insertAll(*base);
  snap->saturated = std::make_shared<const Graph>(saturate(std::move(g)));
  auto [registry, reports] = extractRegistry(snap->saturated);
  if (options_.endpointRewrite) {
    const auto& [from, to] = *options_.endpointRewrite;
    for (auto& [iri, d] : registry.services)
      if (d.endpoint.rfind(from, 0) == 0) d.endpoint = to + d.endpoint.substr(from.size());
  }
  snap->registry = std::move(registry);
  snap->reports = std::move(reports);
  return snap;
}

std::shared_ptr<const Snapshot> Gateway::snapshot() const {
  std::lock_guard<std::mutex> lock(snapshotMu_);
  return snapshot_;
}

ApiResponse Gateway::analyze(const std::string& query) const {
  auto snap = snapshot();
  return guarded([&]() -> ApiResponse {
    const Graph& g = *snap->saturated;
    QueryPlan plan = parseQuery(g, query);
    Json matched = Json::array();
    Json candidates = Json::array();
    std::optional<MatchResult> first;
    for (std::size_t i = 0; i < plan.stages.size(); ++i) {
      MatchResult m = matchService(snap->registry, plan.stages[i]);
      if (i == 0) first = m;
      matched.push_back(matchJson(i, m));
      Json list = Json::array();
      for (const auto& c : listCandidates(snap->registry, plan.stages[i]))
        list.push_back(matchJson(i, c));
      candidates.push_back(list);
    }
    FormSpec form = formSpecFor(*snap->registry.find(first->service), g);
    return {200,
            {{"plan", planToJson(plan, g)},
             {"matchedServices", matched},
             {"formSpec", toJson(form)},
             {"candidates", candidates}}};
  });
}

ApiResponse Gateway::execute(const std::string& query,
                             const std::map<std::string, std::string>& bindings) {
  auto snap = snapshot();
  const std::string session = "r" + std::to_string(++requestCounter_);
  return guarded([&]() -> ApiResponse {
    std::vector<Binding> list;
    for (const auto& [k, v] : bindings) {
      try {
        list.push_back({bindingKey(k), v});
      } catch (const Error&) {
        throw Error("InvalidRequest", "binding key is not an IRI: " + k, {{"param", k}});
      }
    }
    QueryPlan plan = parseQuery(*snap->saturated, query);
    ExecutionOptions opts;
    opts.timeoutMs = options_.timeoutMs;
    ResultGraph result = executePlan(snap->registry, plan, list, *transport_, session, opts);
    return {200, executeResponse(result, *snap->saturated)};
  });
}

ApiResponse Gateway::registerTurtle(const std::string& body) {
  std::lock_guard<std::mutex> writer(writerMu_);
  auto old = snapshot();
  return guarded([&]() -> ApiResponse {
    auto merged = std::make_shared<Graph>(*old->base);
    parseInto(*merged, body);
    auto next = buildSnapshot(merged);

    Json reports = Json::array();
    bool ok = true;
    for (const auto& r : next->reports) {
      reports.push_back(toJson(r));
      ok = ok && r.ok();
    }
    if (!ok)
      return {422,
              {{"code", "ValidationFailed"},
               {"message", "registration rejected; registry unchanged"},
               {"context", Json::object()},
               {"reports", reports}}};

    if (options_.ontologyPath) {
      const std::string tmp = *options_.ontologyPath + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize(*merged);
        if (!out) throw Error("PersistError", "cannot write " + tmp);
      }
      if (std::rename(tmp.c_str(), options_.ontologyPath->c_str()) != 0)
        throw Error("PersistError", "cannot replace " + *options_.ontologyPath);
    }

    Json added = Json::array();
    for (const auto& [iri, d] : next->registry.services)
      if (old->registry.services.count(iri) == 0) added.push_back(iri.str());
    const std::size_t count = next->registry.services.size();
    {
      std::lock_guard<std::mutex> lock(snapshotMu_);
      snapshot_ = next;
    }
    return {200, {{"status", "registered"}, {"added", added},
                  {"services", count}, {"reports", reports}}};
  });
}

ApiResponse Gateway::services() const {
  auto snap = snapshot();
  Json list = Json::array();
  for (const auto& r : snap->reports) {
    Json entry = toJson(r);
    entry["label"] = labelOf(*snap->saturated, r.service);
    if (const auto* d = snap->registry.find(r.service)) entry["endpoint"] = d->endpoint;
    list.push_back(entry);
  }
  return {200, {{"services", list}}};
}

ApiResponse Gateway::health() const {
  auto snap = snapshot();
  return {200, {{"status", "ok"},
                {"services", snap->registry.services.size()},
                {"triples", snap->saturated->size()}}};
}

ApiResponse Gateway::analyzeJson(const std::string& body) const {
  Json req = Json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object() || !req.contains("query") ||
      !req["query"].is_string())
    return {400, {{"code", "InvalidRequest"},
                  {"message", "expected {\"query\": string}"},
                  {"context", Json::object()}}};
  return analyze(req["query"].get<std::string>());
}

ApiResponse Gateway::executeJson(const std::string& body) {
  Json req = Json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object() || !req.contains("query") ||
      !req["query"].is_string())
    return {400, {{"code", "InvalidRequest"},
                  {"message", "expected {\"query\": string, \"bindings\": object}"},
                  {"context", Json::object()}}};
  std::map<std::string, std::string> bindings;
  if (req.contains("bindings")) {
    if (!req["bindings"].is_object())
      return {400, {{"code", "InvalidRequest"},
                    {"message", "bindings must be an object"},
                    {"context", Json::object()}}};
    for (const auto& [k, v] : req["bindings"].items())
      bindings[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return execute(req["query"].get<std::string>(), bindings);
}

struct HttpServer::Impl {
  httplib::Server server;
  std::thread thread;
};

namespace {

void reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(Gateway& gateway, std::optional<std::string> staticDir)
    : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  s.Post("/api/analyze", [&gateway](const httplib::Request& req, httplib::Response& res) {
    reply(res, gateway.analyzeJson(req.body));
  });
  s.Post("/api/execute", [&gateway](const httplib::Request& req, httplib::Response& res) {
    reply(res, gateway.executeJson(req.body));
  });
  s.Get("/api/services", [&gateway](const httplib::Request&, httplib::Response& res) {
    reply(res, gateway.services());
  });
  s.Post("/api/services", [&gateway](const httplib::Request& req, httplib::Response& res) {
    reply(res, gateway.registerTurtle(req.body));
  });
  s.Get("/api/health", [&gateway](const httplib::Request&, httplib::Response& res) {
    reply(res, gateway.health());
  });
  if (staticDir) s.set_mount_point("/", *staticDir);
  // httplib also sets SO_REUSEPORT, which would let two servers share a
  // port; keep only SO_REUSEADDR so PortInUse is detected.
  s.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  auto& s = impl_->server;
  int bound = port;
  if (port == 0) {
    bound = s.bind_to_any_port(host);
    if (bound <= 0) throw Error("PortInUse", "no free port");
  } else if (!s.bind_to_port(host, port)) {
    throw Error("PortInUse", "port " + std::to_string(port) + " is in use",
                {{"port", std::to_string(port)}});
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  s.wait_until_ready();
  return bound;
}

void HttpServer::run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port))
    throw Error("PortInUse", "cannot listen on port " + std::to_string(port),
                {{"port", std::to_string(port)}});
}

void HttpServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace smart
