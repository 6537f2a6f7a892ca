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

#ifndef SMART_QUERY_HPP_
#define SMART_QUERY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smart/graph.hpp"
#include "smart/term.hpp"

namespace smart {

/// One (inputType, predicate, outputType) step. An absent type stands for
/// the universal DomainThing class.
struct SubQuery {
  std::optional<Iri> inputType;
  Iri predicate;
  std::optional<Iri> outputType;

  bool operator==(const SubQuery&) const = default;
};

std::string toString(const SubQuery& q);

/// Stages in execution order: the group next to "this" runs first.
struct QueryPlan {
  std::vector<SubQuery> stages;
  Iri seedType;

  bool operator==(const QueryPlan&) const = default;
};

/// Parses `find {[<class>] <predicate>} this <class>`.
///
/// Matching is case-insensitive. Phrases are resolved longest window first
/// (at most 4 words) with backtracking; "the", "a" and "an" are skipped
/// between phrases. Throws Error("MissingFind"), Error("MissingThis"),
/// Error("EmptyPlan"), UnknownLabel or AmbiguousLabel. Label positions are
/// 0-based word indexes in the sentence.
QueryPlan parseQuery(const Graph& graph, std::string_view text);

}  // namespace smart

#endif  // SMART_QUERY_HPP_
