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

#include "smart/term.hpp"

#include <algorithm>
#include <cctype>

#include "smart/errors.hpp"

namespace smart {

namespace {

bool isSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw MalformedTriple("empty IRI");
  if (std::any_of(value_.begin(), value_.end(), isSpace))
    throw MalformedTriple("IRI contains whitespace: '" + value_ + "'");
}

std::string_view Iri::localName() const noexcept {
  std::string_view v = value_;
  auto pos = v.find_last_of("#/");
  if (pos == std::string_view::npos || pos + 1 == v.size()) return v;
  return v.substr(pos + 1);
}

std::string_view datatypeName(Datatype d) noexcept {
  switch (d) {
    case Datatype::kString:
      return "string";
    case Datatype::kDecimal:
      return "decimal";
    case Datatype::kBoolean:
      return "boolean";
  }
  return "string";
}

bool isDecimalLexical(std::string_view s) noexcept {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t intDigits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++intDigits;
  }
  std::size_t fracDigits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++fracDigits;
    }
  }
  return i == s.size() && intDigits + fracDigits > 0;
}

bool isBooleanLexical(std::string_view s) noexcept {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

Literal::Literal(std::string lexical, Datatype datatype,
                 std::optional<std::string> lang)
    : lexical_(std::move(lexical)), datatype_(datatype), lang_(std::move(lang)) {
  if (lang_ && datatype_ != Datatype::kString)
    throw MalformedTriple("language tag on a non-string literal");
  if (lang_ && lang_->empty()) throw MalformedTriple("empty language tag");
  if (datatype_ == Datatype::kDecimal && !isDecimalLexical(lexical_))
    throw MalformedTriple("'" + lexical_ + "' is not a decimal");
  if (datatype_ == Datatype::kBoolean && !isBooleanLexical(lexical_))
    throw MalformedTriple("'" + lexical_ + "' is not a boolean");
}

std::string toString(const Term& t) {
  struct Visitor {
    std::string operator()(const Iri& iri) const { return "<" + iri.str() + ">"; }
    std::string operator()(const BlankNode& b) const {
      return "_:b" + std::to_string(b.id);
    }
    std::string operator()(const Literal& l) const {
      std::string out = "\"" + l.lexical() + "\"";
      if (l.lang()) return out + "@" + *l.lang();
      if (l.datatype() != Datatype::kString)
        out += "^^" + std::string(datatypeName(l.datatype()));
      return out;
    }
  };
  return std::visit(Visitor{}, t);
}

void checkTriple(const Triple& t) {
  if (isLiteral(t.subject))
    throw MalformedTriple("literal " + toString(t.subject) +
                          " in subject position");
  if (t.predicate.str().empty()) throw MalformedTriple("empty predicate");
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(t.index());
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  if (const auto* iri = std::get_if<Iri>(&t)) {
    mix(std::hash<std::string>{}(iri->str()));
  } else if (const auto* b = std::get_if<BlankNode>(&t)) {
    mix(std::hash<std::uint64_t>{}(b->id));
  } else {
    const auto& l = std::get<Literal>(t);
    mix(std::hash<std::string>{}(l.lexical()));
    mix(static_cast<std::size_t>(l.datatype()));
    if (l.lang()) mix(std::hash<std::string>{}(*l.lang()));
  }
  return h;
}

}  // namespace smart
