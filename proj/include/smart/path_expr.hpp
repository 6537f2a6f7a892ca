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

#ifndef SMART_PATH_EXPR_HPP_
#define SMART_PATH_EXPR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "smart/xml.hpp"

namespace smart {

/// Location-path subset: "/", ".", "name", "a/b", "/a/b". No predicates,
/// attributes or wildcards.
struct PathExpr {
  struct Step {
    bool self = false;
    std::string name;
    bool operator==(const Step&) const = default;
  };
  bool absolute = false;
  std::vector<Step> steps;

  bool operator==(const PathExpr&) const = default;
};

/// Throws Error("InvalidPath").
PathExpr parsePath(std::string_view text);

/// Absolute paths start at `documentRoot` (which must match the first step);
/// "/" alone yields [documentRoot]. Relative paths start at `context`.
/// Each named step maps to all children with that element name, in document
/// order. When `documentRoot` is null, `context` serves as the document root.
std::vector<const XmlNode*> evalPath(const XmlNode& context,
                                     const PathExpr& path,
                                     const XmlNode* documentRoot = nullptr);

}  // namespace smart

#endif  // SMART_PATH_EXPR_HPP_
