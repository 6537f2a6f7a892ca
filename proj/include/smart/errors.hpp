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

#ifndef SMART_ERRORS_HPP_
#define SMART_ERRORS_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace smart {

/// Base class of every error the engine raises.
///
/// `code()` is a stable machine-readable identifier (e.g. "UnknownLabel");
/// `context()` names the offending element (phrase, stage, paramIri,
/// line/column, ...) so API layers can report it without knowing the
/// concrete subclass.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept {
    return context_;
  }

 private:
  std::string code_;
  std::map<std::string, std::string> context_;
};

class MalformedTriple : public Error {
 public:
  explicit MalformedTriple(const std::string& message)
      : Error("MalformedTriple", message) {}
};

class SaturationBudgetExceeded : public Error {
 public:
  explicit SaturationBudgetExceeded(std::size_t budget)
      : Error("SaturationBudgetExceeded",
              "saturation derived more than " + std::to_string(budget) +
                  " triples",
              {{"budget", std::to_string(budget)}}) {}
};

class InvalidRule : public Error {
 public:
  InvalidRule(const std::string& rule, const std::string& message)
      : Error("InvalidRule", rule + ": " + message, {{"rule", rule}}) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("ParseError",
              std::to_string(line) + ":" + std::to_string(column) + ": " +
                  message,
              {{"line", std::to_string(line)},
               {"column", std::to_string(column)}}),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

class UnknownLabel : public Error {
 public:
  UnknownLabel(const std::string& phrase, std::size_t position)
      : Error("UnknownLabel", "no ontology term labeled '" + phrase + "'",
              {{"phrase", phrase}, {"position", std::to_string(position)}}) {}
};

class AmbiguousLabel : public Error {
 public:
  AmbiguousLabel(const std::string& phrase, const std::string& candidates)
      : Error("AmbiguousLabel",
              "label '" + phrase + "' matches several terms: " + candidates,
              {{"phrase", phrase}, {"candidates", candidates}}) {}
};

class UnknownService : public Error {
 public:
  explicit UnknownService(const std::string& iri)
      : Error("UnknownService", iri + " is not a SISOService individual",
              {{"service", iri}}) {}
};

}  // namespace smart

#endif  // SMART_ERRORS_HPP_
