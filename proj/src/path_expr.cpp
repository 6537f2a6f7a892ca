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

#include "smart/path_expr.hpp"

#include "smart/errors.hpp"

namespace smart {

namespace {

[[noreturn]] void invalid(std::string_view text, const std::string& why) {
  throw Error("InvalidPath", "invalid path '" + std::string(text) + "': " + why,
              {{"path", std::string(text)}});
}

bool validStepName(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '@' || c == '*' || c == '[' || c == ']' || c == '(' || c == ')' ||
        c == ' ' || c == '\t' || c == ':' || c == '=')
      return false;
  }
  return s != "..";
}

}  // namespace

PathExpr parsePath(std::string_view text) {
  PathExpr out;
  if (text.empty()) invalid(text, "empty");
  if (text == "/") {
    out.absolute = true;
    return out;
  }
  if (text == ".") {
    out.steps.push_back({true, ""});
    return out;
  }
  std::string_view rest = text;
  if (rest.front() == '/') {
    out.absolute = true;
    rest.remove_prefix(1);
  }
  while (true) {
    auto slash = rest.find('/');
    std::string_view step = rest.substr(0, slash);
    if (!validStepName(step)) invalid(text, "bad step '" + std::string(step) + "'");
    if (step == ".") invalid(text, "'.' is only valid as the whole path");
    out.steps.push_back({false, std::string(step)});
    if (slash == std::string_view::npos) break;
    rest.remove_prefix(slash + 1);
  }
  return out;
}

std::vector<const XmlNode*> evalPath(const XmlNode& context,
                                     const PathExpr& path,
                                     const XmlNode* documentRoot) {
  const XmlNode& root = documentRoot != nullptr ? *documentRoot : context;
  std::vector<const XmlNode*> current;
  std::size_t first = 0;
  if (path.absolute) {
    if (path.steps.empty()) return {&root};
    if (path.steps[0].self || path.steps[0].name == root.name)
      current.push_back(&root);
    first = 1;
  } else {
    current.push_back(&context);
  }
  for (std::size_t i = first; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    if (step.self) continue;
    std::vector<const XmlNode*> next;
    for (const XmlNode* n : current)
      for (const XmlNode& c : n->children)
        if (c.name == step.name) next.push_back(&c);
    current = std::move(next);
  }
  return current;
}

}  // namespace smart
