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

#include "smart/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "smart/errors.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

namespace {

// Returns the offset of the first byte that is not part of a well-formed
// UTF-8 sequence, or npos.
std::size_t invalidUtf8Offset(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t min = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    std::uint32_t cp = c & (0xFF >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool isAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool isDigit(char c) { return c >= '0' && c <= '9'; }
bool isHigh(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool isNameStart(char c) { return isAlpha(c) || c == '_' || isHigh(c); }
bool isNameChar(char c) {
  return isNameStart(c) || isDigit(c) || c == '-' || c == '.';
}
bool isWs(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::optional<Datatype> datatypeFor(const std::string& iri) {
  const std::string& x = vocab::kXsd;
  if (iri == x + "string") return Datatype::kString;
  if (iri == x + "boolean") return Datatype::kBoolean;
  for (const char* n : {"decimal", "integer", "int", "long", "double", "float"})
    if (iri == x + n) return Datatype::kDecimal;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, Graph& graph) : in_(text), graph_(graph) {}

  std::vector<Triple> run() {
    if (auto bad = invalidUtf8Offset(in_); bad != std::string_view::npos)
      fail(bad, "invalid UTF-8");
    skipWs();
    while (!atEnd()) {
      if (peek() == '@') {
        directive();
      } else if (matchKeywordCI("PREFIX")) {
        sparqlPrefix();
      } else {
        statement();
      }
      skipWs();
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < in_.size(); ++i) {
      if (in_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(in_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError(line, col, message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(pos_, message); }

  bool atEnd() const { return pos_ >= in_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }

  void skipWs() {
    while (!atEnd()) {
      char c = peek();
      if (isWs(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!atEnd() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skipWs();
    if (atEnd()) fail(std::string("unexpected end of input, expected ") + what);
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool matchKeywordCI(std::string_view kw) const {
    if (pos_ + kw.size() > in_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(in_[pos_ + i])) != kw[i])
        return false;
    char after = peek(kw.size());
    return after == '\0' || isWs(after);
  }

  void directive() {
    std::size_t start = pos_;
    ++pos_;
    std::size_t wordStart = pos_;
    while (!atEnd() && isAlpha(peek())) ++pos_;
    std::string_view word = in_.substr(wordStart, pos_ - wordStart);
    if (word != "prefix") fail(start, "unsupported directive @" + std::string(word));
    prefixBody();
    expect('.', "'.' after @prefix");
  }

  void sparqlPrefix() {
    pos_ += 6;
    prefixBody();
  }

  void prefixBody() {
    skipWs();
    std::size_t start = pos_;
    while (!atEnd() && isNameChar(peek())) ++pos_;
    std::string prefix(in_.substr(start, pos_ - start));
    if (!prefix.empty() && (prefix.back() == '.' || !isAlpha(prefix.front())))
      fail(start, "invalid prefix name");
    if (atEnd()) fail("unexpected end of input, expected ':'");
    if (peek() != ':') fail("expected ':' after prefix name");
    ++pos_;
    skipWs();
    if (atEnd()) fail("unexpected end of input, expected <IRI>");
    if (peek() != '<') fail("expected <IRI>");
    prefixes_[prefix] = iriRef();
  }

  std::string iriRef() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    std::string value;
    while (true) {
      if (atEnd()) fail("unterminated IRI");
      char c = peek();
      if (c == '>') break;
      if (isWs(c) || c == '<' || c == '"') fail("invalid character in IRI");
      if (c == '\\') {
        value += unicodeEscape();
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    ++pos_;
    if (value.empty()) fail(start, "empty IRI");
    if (value.find(':') == std::string::npos)
      fail(start, "relative IRIs are not supported");
    return value;
  }

  std::string unicodeEscape() {
    std::size_t start = pos_;
    ++pos_;  // backslash
    char kind = peek();
    std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (digits == 0) fail(start, "invalid escape");
    ++pos_;
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char h = peek();
      int v = isDigit(h) ? h - '0'
              : (h >= 'a' && h <= 'f') ? h - 'a' + 10
              : (h >= 'A' && h <= 'F') ? h - 'A' + 10
                                       : -1;
      if (v < 0) fail("invalid hex digit in escape");
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      fail(start, "escape is not a Unicode scalar value");
    std::string out;
    appendUtf8(out, cp);
    return out;
  }

  // PN_PREFIX? ':' PN_LOCAL?
  std::string prefixedName() {
    std::size_t start = pos_;
    while (!atEnd() && isNameChar(peek())) ++pos_;
    std::string prefix(in_.substr(start, pos_ - start));
    if (atEnd() || peek() != ':') {
      pos_ = start;
      fail("expected a term");
    }
    if (!prefix.empty() && (!isAlpha(prefix.front()) || prefix.back() == '.')) {
      fail(start, "invalid prefix name");
    }
    ++pos_;
    std::size_t localStart = pos_;
    if (!atEnd() && (isNameStart(peek()) || isDigit(peek()) || peek() == ':')) {
      ++pos_;
      while (!atEnd() && (isNameChar(peek()) || peek() == ':')) ++pos_;
      while (pos_ > localStart && in_[pos_ - 1] == '.') --pos_;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail(start, "unknown prefix '" + prefix + ":'");
    return it->second + std::string(in_.substr(localStart, pos_ - localStart));
  }

  Iri iri() {
    std::size_t start = pos_;
    std::string value = peek() == '<' ? iriRef() : prefixedName();
    try {
      return Iri(value);
    } catch (const MalformedTriple& e) {
      fail(start, e.what());
    }
  }

  BlankNode labeledBlank() {
    std::size_t start = pos_;
    pos_ += 2;  // "_:"
    std::size_t nameStart = pos_;
    while (!atEnd() && (isNameChar(peek()))) ++pos_;
    while (pos_ > nameStart && in_[pos_ - 1] == '.') --pos_;
    if (pos_ == nameStart) fail(start, "empty blank node label");
    std::string name(in_.substr(nameStart, pos_ - nameStart));
    auto [it, inserted] = blanks_.try_emplace(name, BlankNode{});
    if (inserted) it->second = graph_.freshBlank();
    return it->second;
  }

  // After '[': either ']' or a predicate-object list then ']'.
  BlankNode blankPropertyList() {
    ++pos_;
    BlankNode node = graph_.freshBlank();
    skipWs();
    if (atEnd()) fail("unexpected end of input, expected ']'");
    if (peek() != ']') predicateObjectList(node);
    expect(']', "']'");
    return node;
  }

  void statement() {
    std::size_t start = pos_;
    Term subject;
    char c = peek();
    if (c == '[') {
      BlankNode b = blankPropertyList();
      subject = b;
      skipWs();
      if (!atEnd() && peek() != '.') predicateObjectList(subject);
    } else {
      if (c == '<') {
        subject = iri();
      } else if (c == '_' && peek(1) == ':') {
        subject = labeledBlank();
      } else if (c == '"' || c == '\'' || isDigit(c) || c == '+' || c == '-') {
        fail(start, "a literal cannot be a subject");
      } else {
        subject = iri();
      }
      predicateObjectList(subject);
    }
    expect('.', "'.' at end of statement");
  }

  void predicateObjectList(const Term& subject) {
    while (true) {
      skipWs();
      if (atEnd()) fail("unexpected end of input, expected a predicate");
      Iri predicate = verb();
      objectList(subject, predicate);
      skipWs();
      if (atEnd() || peek() != ';') return;
      while (!atEnd() && peek() == ';') {
        ++pos_;
        skipWs();
      }
      if (atEnd() || peek() == '.' || peek() == ']') return;
    }
  }

  Iri verb() {
    if (peek() == 'a') {
      char next = peek(1);
      if (next == '\0' || isWs(next) || next == '<' || next == '[' ||
          next == '"' || next == '_') {
        ++pos_;
        return vocab::rdfType;
      }
    }
    char c = peek();
    if (c != '<' && c != ':' && !isNameStart(c)) fail("expected a predicate");
    return iri();
  }

  void objectList(const Term& subject, const Iri& predicate) {
    while (true) {
      skipWs();
      if (atEnd()) fail("unexpected end of input, expected an object");
      Term o = object();
      out_.push_back(Triple{subject, predicate, std::move(o)});
      skipWs();
      if (atEnd() || peek() != ',') return;
      ++pos_;
    }
  }

  Term object() {
    char c = peek();
    if (c == '<') return iri();
    if (c == '[') return blankPropertyList();
    if (c == '_' && peek(1) == ':') return labeledBlank();
    if (c == '"' || c == '\'') return stringLiteral();
    if (isDigit(c) || c == '+' || c == '-' || (c == '.' && isDigit(peek(1))))
      return numericLiteral();
    for (const char* kw : {"true", "false"}) {
      std::string_view k(kw);
      if (in_.substr(pos_, k.size()) == k) {
        char after = peek(k.size());
        if (after != ':' && !isNameChar(after)) {
          pos_ += k.size();
          return Literal(std::string(k), Datatype::kBoolean);
        }
      }
    }
    if (c == ':' || isNameStart(c)) return iri();
    fail("expected an object");
  }

  Term numericLiteral() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (isDigit(peek())) ++pos_;
    if (peek() == '.' && isDigit(peek(1))) {
      ++pos_;
      while (isDigit(peek())) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') fail("double literals are not supported");
    std::string lex(in_.substr(start, pos_ - start));
    if (!isDecimalLexical(lex)) fail(start, "invalid number");
    return Literal(lex, Datatype::kDecimal);
  }

  Term stringLiteral() {
    std::size_t start = pos_;
    char quote = peek();
    if (peek(1) == quote && peek(2) == quote)
      fail(start, "long string literals are not supported");
    ++pos_;
    std::string value;
    while (true) {
      if (atEnd()) fail(start, "unterminated string literal");
      char c = peek();
      if (c == quote) break;
      if (c == '\n' || c == '\r') fail("newline in string literal");
      if (c == '\\') {
        char e = peek(1);
        if (e == 'u' || e == 'U') {
          value += unicodeEscape();
          continue;
        }
        char decoded;
        switch (e) {
          case 't': decoded = '\t'; break;
          case 'b': decoded = '\b'; break;
          case 'n': decoded = '\n'; break;
          case 'r': decoded = '\r'; break;
          case 'f': decoded = '\f'; break;
          case '"': decoded = '"'; break;
          case '\'': decoded = '\''; break;
          case '\\': decoded = '\\'; break;
          default: fail("invalid escape");
        }
        value.push_back(decoded);
        pos_ += 2;
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    ++pos_;

    if (peek() == '@') {
      std::size_t tagStart = ++pos_;
      while (isAlpha(peek())) ++pos_;
      if (pos_ == tagStart) fail("empty language tag");
      while (peek() == '-' && (isAlpha(peek(1)) || isDigit(peek(1)))) {
        ++pos_;
        while (isAlpha(peek()) || isDigit(peek())) ++pos_;
      }
      return Literal(value, Datatype::kString,
                     std::string(in_.substr(tagStart, pos_ - tagStart)));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      std::size_t dtStart = pos_;
      if (atEnd()) fail("unexpected end of input, expected a datatype");
      Iri dt = iri();
      auto kind = datatypeFor(dt.str());
      if (!kind) fail(dtStart, "unsupported datatype <" + dt.str() + ">");
      try {
        return Literal(value, *kind);
      } catch (const MalformedTriple& e) {
        fail(start, e.what());
      }
    }
    return Literal(value);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  Graph& graph_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, BlankNode> blanks_;
  std::vector<Triple> out_;
};

// --- serialization ---------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& serializerPrefixes() {
  static const std::vector<std::pair<std::string, std::string>> p = {
      {"", vocab::kNs},          {"owl", vocab::kOwl},
      {"rdf", vocab::kRdf},      {"rdfs", vocab::kRdfs},
      {"xsd", vocab::kXsd},
  };
  return p;
}

bool isSafeLocal(std::string_view s) {
  if (s.empty()) return false;
  if (!(isAlpha(s.front()) || isDigit(s.front()) || s.front() == '_'))
    return false;
  if (s.back() == '.') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return isAlpha(c) || isDigit(c) || c == '_' || c == '-' || c == '.';
  });
}

std::string hex4(unsigned v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04X", v);
  return buf;
}

std::string writeIri(const Iri& iri) {
  const std::string& v = iri.str();
  if (iri == vocab::rdfType) return "a";
  for (const auto& [prefix, ns] : serializerPrefixes()) {
    if (v.size() > ns.size() && v.compare(0, ns.size(), ns) == 0 &&
        isSafeLocal(std::string_view(v).substr(ns.size())))
      return prefix + ":" + v.substr(ns.size());
  }
  std::string out = "<";
  for (char c : v) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || std::string_view("<>\"{}|^`\\").find(c) != std::string_view::npos)
      out += "\\u" + hex4(u);
    else
      out.push_back(c);
  }
  return out + ">";
}

std::string writeString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20)
          out += "\\u" + hex4(static_cast<unsigned char>(c));
        else
          out.push_back(c);
    }
  }
  return out + "\"";
}

std::string writeTerm(const Term& t, bool predicatePosition = false) {
  if (const auto* iri = std::get_if<Iri>(&t)) {
    if (!predicatePosition && *iri == vocab::rdfType)
      return "rdf:type";
    return writeIri(*iri);
  }
  if (const auto* b = std::get_if<BlankNode>(&t)) return "_:b" + std::to_string(b->id);
  const auto& l = std::get<Literal>(t);
  std::string out = writeString(l.lexical());
  if (l.lang()) return out + "@" + *l.lang();
  if (l.datatype() == Datatype::kDecimal) return out + "^^xsd:decimal";
  if (l.datatype() == Datatype::kBoolean) return out + "^^xsd:boolean";
  return out;
}

}  // namespace

void parseInto(Graph& graph, std::string_view text) {
  std::vector<Triple> triples = Parser(text, graph).run();
  for (const Triple& t : triples) graph.insert(t);
}

Graph parseDocument(std::string_view text) {
  Graph g;
  parseInto(g, text);
  return g;
}

std::string serialize(const Graph& graph) {
  std::string out;
  for (const auto& [prefix, ns] : serializerPrefixes())
    out += "@prefix " + prefix + ": <" + ns + "> .\n";

  std::map<Term, std::map<Iri, std::vector<Term>>> bySubject;
  for (const Triple& t : graph.triples())
    bySubject[t.subject][t.predicate].push_back(t.object);

  for (auto& [subject, preds] : bySubject) {
    out += "\n" + writeTerm(subject);
    bool firstPred = true;
    for (auto& [pred, objects] : preds) {
      std::sort(objects.begin(), objects.end());
      out += firstPred ? " " : " ;\n    ";
      firstPred = false;
      out += writeTerm(pred, true) + " ";
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (i) out += ", ";
        out += writeTerm(objects[i]);
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace smart
