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

#ifndef SMART_GRAPH_HPP_
#define SMART_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "smart/term.hpp"

namespace smart {

using TermId = std::uint32_t;

struct IdTriple {
  TermId s = 0;
  TermId p = 0;
  TermId o = 0;
  bool operator==(const IdTriple&) const = default;
};

struct IdTripleHash {
  std::size_t operator()(const IdTriple& t) const noexcept {
    std::uint64_t h = t.s;
    h = h * 0x100000001b3ULL ^ t.p;
    h = h * 0x100000001b3ULL ^ t.o;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Set of triples with (s), (p), (o), (s,p) and (p,o) indexes.
///
/// Terms are dictionary-encoded; the id-level interface is what the reasoner
/// joins over. Rows are kept in insertion order, so a cursor over `row(i)`
/// sees every triple inserted after it was created.
class Graph {
 public:
  /// Returns true if the triple was new. Throws MalformedTriple.
  bool insert(const Triple& t);
  void insertAll(const Graph& other);

  bool contains(const Triple& t) const;
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Every triple matching the bound positions; nullopt is a wildcard.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  /// Objects of (s, p, ?) in insertion order.
  std::vector<Term> objects(const Term& s, const Iri& p) const;
  /// Subjects of (?, p, o) in insertion order.
  std::vector<Term> subjects(const Iri& p, const Term& o) const;

  std::vector<Triple> triples() const;

  /// Allocates a blank node id never used in this graph.
  BlankNode freshBlank() noexcept { return BlankNode{nextBlank_++}; }

  // Id-level access.
  std::optional<TermId> lookup(const Term& t) const;
  TermId intern(const Term& t);
  const Term& term(TermId id) const { return terms_[id]; }
  const IdTriple& row(std::size_t i) const { return rows_[i]; }
  bool insertIds(const IdTriple& t);
  bool containsIds(const IdTriple& t) const { return set_.count(t) != 0; }
  /// Calls `fn` for every row matching the bound ids until it returns false.
  void forEachMatch(std::optional<TermId> s, std::optional<TermId> p,
                    std::optional<TermId> o,
                    const std::function<bool(const IdTriple&)>& fn) const;
  Triple decode(const IdTriple& t) const;

 private:
  using RowList = std::vector<std::uint32_t>;
  static std::uint64_t pairKey(TermId a, TermId b) noexcept {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  const RowList* find(const std::unordered_map<TermId, RowList>& idx,
                      TermId key) const;
  const RowList* find(const std::unordered_map<std::uint64_t, RowList>& idx,
                      std::uint64_t key) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<IdTriple> rows_;
  std::unordered_set<IdTriple, IdTripleHash> set_;
  std::unordered_map<TermId, RowList> byS_, byP_, byO_;
  std::unordered_map<std::uint64_t, RowList> bySP_, byPO_;
  std::uint64_t nextBlank_ = 0;
};

}  // namespace smart

#endif  // SMART_GRAPH_HPP_
