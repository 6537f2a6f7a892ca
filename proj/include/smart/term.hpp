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

#ifndef SMART_TERM_HPP_
#define SMART_TERM_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace smart {

/// An absolute IRI. Equality is exact string equality.
class Iri {
 public:
  Iri() = default;
  /// Throws MalformedTriple if `value` is empty or contains whitespace.
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }

  /// Text after the last '#' or '/', or the whole IRI if neither occurs.
  std::string_view localName() const noexcept;

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

/// Graph-local anonymous node.
struct BlankNode {
  std::uint64_t id = 0;
  auto operator<=>(const BlankNode&) const = default;
};

enum class Datatype : std::uint8_t { kString, kDecimal, kBoolean };

std::string_view datatypeName(Datatype d) noexcept;

class Literal {
 public:
  Literal() = default;
  /// Validates the lexical form against `datatype`; throws MalformedTriple on
  /// a non-decimal decimal, a non-boolean boolean, or a language tag on a
  /// non-string literal.
  Literal(std::string lexical, Datatype datatype = Datatype::kString,
          std::optional<std::string> lang = std::nullopt);

  const std::string& lexical() const noexcept { return lexical_; }
  Datatype datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& lang() const noexcept { return lang_; }

  auto operator<=>(const Literal&) const = default;

 private:
  std::string lexical_;
  Datatype datatype_ = Datatype::kString;
  std::optional<std::string> lang_;
};

bool isDecimalLexical(std::string_view s) noexcept;
bool isBooleanLexical(std::string_view s) noexcept;

/// Iri < BlankNode < Literal under the variant ordering.
using Term = std::variant<Iri, BlankNode, Literal>;

inline bool isIri(const Term& t) noexcept {
  return std::holds_alternative<Iri>(t);
}
inline bool isBlank(const Term& t) noexcept {
  return std::holds_alternative<BlankNode>(t);
}
inline bool isLiteral(const Term& t) noexcept {
  return std::holds_alternative<Literal>(t);
}

/// Debug rendering: <iri>, _:bN, "lex"^^dt / "lex"@lang.
std::string toString(const Term& t);

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

/// Throws MalformedTriple when a literal is in subject position.
void checkTriple(const Triple& t);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace smart

#endif  // SMART_TERM_HPP_
