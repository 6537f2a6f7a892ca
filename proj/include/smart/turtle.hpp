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

#ifndef SMART_TURTLE_HPP_
#define SMART_TURTLE_HPP_

#include <string>
#include <string_view>

#include "smart/graph.hpp"

namespace smart {

// Turtle subset reader/writer.
//
// Supported: @prefix / PREFIX, prefixed names, <absolute IRIs>, `a`,
// predicate lists (;), object lists (,), [ ... ] and _:label blank nodes,
// "..." / '...' strings with @lang or ^^datatype, bare integers, decimals
// and booleans, # comments. Not supported: collections, long strings,
// @base and relative IRIs. Input must be UTF-8.

/// Throws ParseError carrying the 1-based line and column of the first
/// offending character (one past the end for truncated input).
Graph parseDocument(std::string_view text);

/// Parses into an existing graph, drawing blank node ids from it. Nothing is
/// inserted if parsing fails.
void parseInto(Graph& graph, std::string_view text);

/// Deterministic rendering: a fixed prefix header, then subjects sorted by
/// term order with predicates and objects sorted within each subject.
std::string serialize(const Graph& graph);

}  // namespace smart

#endif  // SMART_TURTLE_HPP_
