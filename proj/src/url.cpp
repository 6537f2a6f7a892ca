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

#include <algorithm>
#include <map>

#include "smart/executor.hpp"
#include "smart/ontology.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

Datatype dataPropertyType(const Graph& graph, const Iri& property) {
  for (const Term& t : graph.objects(property, vocab::range)) {
    if (t == Term(vocab::xsdDecimal)) return Datatype::kDecimal;
    if (t == Term(vocab::xsdBoolean)) return Datatype::kBoolean;
  }
  return Datatype::kString;
}

namespace {

void collectFields(const ParameterNode& node, const Graph& graph,
                   std::vector<std::string>& path,
                   std::vector<FormField>& out) {
  for (const ParameterNode& c : node.children) {
    if (c.kind == ParameterKind::kVariableRestInput) {
      FormField f;
      f.paramIri = c.iri;
      std::optional<std::string> label;
      if (c.fromDataProperty) {
        label = preferredLabel(graph, *c.fromDataProperty);
        f.valueType = dataPropertyType(graph, *c.fromDataProperty);
      }
      f.label = label ? *label : std::string(c.iri.localName());
      f.mandatory = c.mandatory;
      f.pathLabels = path;
      out.push_back(std::move(f));
    } else if (c.kind == ParameterKind::kSubLogicalInput) {
      std::string step;
      if (c.fromObjectProperty) {
        auto l = preferredLabel(graph, *c.fromObjectProperty);
        step = l ? *l : std::string(c.fromObjectProperty->localName());
      } else {
        step = std::string(c.iri.localName());
      }
      path.push_back(std::move(step));
      collectFields(c, graph, path, out);
      path.pop_back();
    }
  }
}

bool isUnreserved(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~';
}

}  // namespace

FormSpec formSpecFor(const ServiceDescriptor& d, const Graph& graph) {
  FormSpec spec;
  spec.serviceIri = d.iri;
  auto title = preferredLabel(graph, d.iri);
  spec.title = title ? *title : std::string(d.iri.localName());
  std::vector<std::string> path;
  collectFields(d.rootInput, graph, path, spec.fields);
  return spec;
}

std::string percentEncode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (isUnreserved(c)) {
      out.push_back(ch);
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string buildUrl(const ServiceDescriptor& d,
                     const std::vector<Binding>& bindings, const Graph& graph) {
  std::map<Iri, std::string> values;
  for (const Binding& b : bindings) values[b.paramIri] = b.value;

  using Param = std::pair<std::string, std::string>;
  std::vector<Param> statics;
  for (const ParameterNode& s : d.staticInputs)
    statics.emplace_back(s.parameterName.value_or(""), s.parameterValue.value_or(""));

  std::vector<Param> variables;
  for (const ParameterNode& v : d.variableInputs) {
    auto it = values.find(v.iri);
    if (it == values.end() || it->second.empty()) {
      if (v.mandatory)
        throw Error("MissingMandatoryInput",
                    "no value for mandatory input " + v.iri.str(),
                    {{"param", v.iri.str()}});
      continue;
    }
    Datatype type = v.fromDataProperty ? dataPropertyType(graph, *v.fromDataProperty)
                                       : Datatype::kString;
    bool ok = type == Datatype::kDecimal   ? isDecimalLexical(it->second)
              : type == Datatype::kBoolean ? isBooleanLexical(it->second)
                                           : true;
    if (!ok)
      throw Error("InvalidValue",
                  "'" + it->second + "' is not a valid " +
                      std::string(datatypeName(type)) + " for " + v.iri.str(),
                  {{"param", v.iri.str()}, {"value", it->second}});
    variables.emplace_back(v.parameterName.value_or(""), it->second);
  }

  auto byName = [](const Param& a, const Param& b) { return a.first < b.first; };
  std::stable_sort(statics.begin(), statics.end(), byName);
  std::stable_sort(variables.begin(), variables.end(), byName);

  std::string url = d.endpoint;
  bool first = true;
  for (const auto* group : {&statics, &variables}) {
    for (const auto& [name, value] : *group) {
      if (first) {
        url.push_back(url.find('?') == std::string::npos ? '?' : '&');
        first = false;
      } else {
        url.push_back('&');
      }
      url += percentEncode(name) + "=" + percentEncode(value);
    }
  }
  return url;
}

}  // namespace smart
