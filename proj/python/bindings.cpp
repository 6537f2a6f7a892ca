// Python extension. Payloads cross the boundary as JSON text; the package
// wrapper decodes them.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smart/errors.hpp"
#include "smart/fixtures.hpp"
#include "smart/gateway.hpp"
#include "smart/ontology.hpp"
#include "smart/service_model.hpp"

namespace py = pybind11;

namespace {

std::pair<int, std::string> wrap(const smart::ApiResponse& r) {
  return {r.status, r.body.dump()};
}

std::string validate(const std::string& turtle) {
  auto graph = std::make_shared<const smart::Graph>(smart::loadOntology(turtle));
  auto [registry, reports] = smart::extractRegistry(graph);
  smart::Json out = smart::Json::array();
  for (const auto& r : reports) out.push_back(smart::toJson(r));
  return out.dump();
}

std::unique_ptr<smart::Gateway> makeGateway(
    const std::optional<std::string>& turtle,
    const std::optional<std::string>& fixtureBaseUrl, int timeoutMs) {
  smart::GatewayOptions options;
  options.timeoutMs = timeoutMs;
  if (fixtureBaseUrl)
    options.endpointRewrite = {std::string(smart::fixtures::kBaseUrl), *fixtureBaseUrl};
  std::string text = turtle ? *turtle : std::string(smart::fixtures::servicesTurtle());
  return std::make_unique<smart::Gateway>(text, std::make_shared<smart::HttpTransport>(),
                                          options);
}

}  // namespace

PYBIND11_MODULE(_smartmash, m) {
  static py::exception<smart::Error> engineError(m, "EngineError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const smart::Error& e) {
      py::set_error(engineError, smart::errorBody(e).dump().c_str());
    }
  });

  m.def("validate", &validate, py::arg("turtle"));
  m.def("services_turtle", [] { return std::string(smart::fixtures::servicesTurtle()); });
  m.def("get_operator_turtle",
        [] { return std::string(smart::fixtures::getOperatorTurtle()); });

  py::class_<smart::Gateway>(m, "Gateway")
      .def(py::init(&makeGateway), py::arg("turtle") = std::nullopt,
           py::arg("fixture_base_url") = std::nullopt, py::arg("timeout_ms") = 10000)
      .def("analyze", [](const smart::Gateway& g, const std::string& q) {
             py::gil_scoped_release release;
             return wrap(g.analyze(q));
           })
      .def("execute",
           [](smart::Gateway& g, const std::string& q,
              const std::map<std::string, std::string>& bindings) {
             py::gil_scoped_release release;
             return wrap(g.execute(q, bindings));
           },
           py::arg("query"), py::arg("bindings") = std::map<std::string, std::string>{})
      .def("register", [](smart::Gateway& g, const std::string& turtle) {
             py::gil_scoped_release release;
             return wrap(g.registerTurtle(turtle));
           })
      .def("services", [](const smart::Gateway& g) { return wrap(g.services()); })
      .def("health", [](const smart::Gateway& g) { return wrap(g.health()); });

  py::class_<smart::fixtures::FixtureServer>(m, "FixtureServer")
      .def(py::init<int>(), py::arg("port") = 0)
      .def_property_readonly("port", &smart::fixtures::FixtureServer::port)
      .def_property_readonly("base_url", &smart::fixtures::FixtureServer::baseUrl)
      .def("stop", &smart::fixtures::FixtureServer::stop);
}
