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

#ifndef SMART_XML_HPP_
#define SMART_XML_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace smart {

/// Element tree. `text` is the element's own character data, concatenated.
struct XmlNode {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<XmlNode> children;
  std::string text;

  bool operator==(const XmlNode&) const = default;
};

/// Parses a document into its root element. Throws Error("ResponseParseError").
XmlNode parseXml(std::string_view body);

/// JSON to XML: the document is wrapped in <resp>; object keys become child
/// elements (invalid XML name characters replaced by '_'); an array under key
/// k becomes repeated k elements; top-level and nested arrays use `item`;
/// scalars become text, null an empty element. Throws Error("InvalidJson").
XmlNode jsonToXml(std::string_view body);

/// Compact serialization without an XML declaration; empty elements are
/// written as <name/>.
std::string toXmlString(const XmlNode& node);

/// Replaces characters that are not valid in an XML name with '_'.
std::string sanitizeXmlName(std::string_view key);

}  // namespace smart

#endif  // SMART_XML_HPP_
