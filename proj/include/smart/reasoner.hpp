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

#ifndef SMART_REASONER_HPP_
#define SMART_REASONER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "smart/graph.hpp"
#include "smart/term.hpp"

namespace smart {

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Variable, Term>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

/// A safe Horn rule: every head variable occurs in the body.
struct Rule {
  std::string name;
  std::vector<TriplePattern> body;
  TriplePattern head;
};

/// Throws InvalidRule for an empty body or an unsafe head.
void checkRule(const Rule& rule);

/// Closure rules for subClassOf, subPropertyOf, inverseOf,
/// equivalentProperty and transitive properties.
const std::vector<Rule>& closureRules();

/// Rules over the service vocabulary: root-input and root-output inference
/// plus the two hasIORelation rules.
const std::vector<Rule>& serviceRules();

struct SaturationOptions {
  std::size_t budget = 1'000'000;
};

/// Least fixpoint of `graph` under closureRules(), serviceRules() and
/// `extraRules`, computed by semi-naive forward chaining. Throws
/// SaturationBudgetExceeded when more than `budget` triples are derived.
Graph saturate(Graph graph, std::span<const Rule> extraRules = {},
               const SaturationOptions& options = {});

}  // namespace smart

#endif  // SMART_REASONER_HPP_
