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

#include "smart/xml.hpp"

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <nlohmann/json.hpp>

#include "smart/errors.hpp"

namespace smart {

namespace {

namespace pt = boost::property_tree;

XmlNode fromPtree(const std::string& name, const pt::ptree& tree) {
  XmlNode node;
  node.name = name;
  node.text = tree.data();
  for (const auto& [key, child] : tree) {
    if (key == "<xmlattr>") {
      for (const auto& [attr, value] : child) node.attributes[attr] = value.data();
    } else if (key == "<xmlcomment>" || key == "<xmltext>") {
      continue;
    } else {
      node.children.push_back(fromPtree(key, child));
    }
  }
  return node;
}

bool isNameStartChar(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c >= 0x80;
}
bool isNameChar(unsigned char c) {
  return isNameStartChar(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

using Json = nlohmann::ordered_json;

std::string scalarText(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void appendJson(XmlNode& parent, const std::string& name, const Json& value) {
  if (value.is_array()) {
    for (const Json& item : value) {
      if (item.is_array()) {
        XmlNode nested;
        nested.name = name;
        appendJson(nested, "item", item);
        parent.children.push_back(std::move(nested));
      } else {
        appendJson(parent, name, item);
      }
    }
    return;
  }
  XmlNode child;
  child.name = name;
  if (value.is_object()) {
    for (const auto& [key, v] : value.items())
      appendJson(child, sanitizeXmlName(key), v);
  } else {
    child.text = scalarText(value);
  }
  parent.children.push_back(std::move(child));
}

std::string escapeXml(std::string_view s, bool attribute) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      default: out.push_back(c);
    }
  }
  return out;
}

void writeXml(const XmlNode& node, std::string& out) {
  out += "<" + node.name;
  for (const auto& [k, v] : node.attributes)
    out += " " + k + "=\"" + escapeXml(v, true) + "\"";
  if (node.children.empty() && node.text.empty()) {
    out += "/>";
    return;
  }
  out += ">";
  out += escapeXml(node.text, false);
  for (const XmlNode& c : node.children) writeXml(c, out);
  out += "</" + node.name + ">";
}

}  // namespace

XmlNode parseXml(std::string_view body) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(body)};
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw Error("ResponseParseError",
                "malformed XML response: " + std::string(e.message()) +
                    " (line " + std::to_string(e.line()) + ")",
                {{"line", std::to_string(e.line())}});
  }
  const pt::ptree* root = nullptr;
  std::string rootName;
  for (const auto& [key, child] : tree) {
    if (key == "<xmlcomment>") continue;
    if (root != nullptr)
      throw Error("ResponseParseError", "XML response has several root elements");
    root = &child;
    rootName = key;
  }
  if (root == nullptr)
    throw Error("ResponseParseError", "XML response has no root element");
  return fromPtree(rootName, *root);
}

std::string sanitizeXmlName(std::string_view key) {
  if (key.empty()) return "_";
  std::string out(key);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = static_cast<unsigned char>(out[i]);
    bool ok = i == 0 ? isNameStartChar(c) : isNameChar(c);
    if (!ok) out[i] = '_';
  }
  return out;
}

XmlNode jsonToXml(std::string_view body) {
  Json doc;
  try {
    doc = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error("InvalidJson", std::string("invalid JSON response: ") + e.what());
  }
  XmlNode root;
  root.name = "resp";
  if (doc.is_object()) {
    for (const auto& [key, v] : doc.items())
      appendJson(root, sanitizeXmlName(key), v);
  } else if (doc.is_array()) {
    appendJson(root, "item", doc);
  } else {
    root.text = scalarText(doc);
  }
  return root;
}

std::string toXmlString(const XmlNode& node) {
  std::string out;
  writeXml(node, out);
  return out;
}

}  // namespace smart
