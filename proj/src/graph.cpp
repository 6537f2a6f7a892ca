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

#include "smart/graph.hpp"

#include "smart/errors.hpp"

namespace smart {

std::optional<TermId> Graph::lookup(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TermId Graph::intern(const Term& t) {
  auto [it, inserted] = ids_.try_emplace(t, static_cast<TermId>(terms_.size()));
  if (inserted) {
    terms_.push_back(t);
    if (const auto* b = std::get_if<BlankNode>(&t); b && b->id >= nextBlank_)
      nextBlank_ = b->id + 1;
  }
  return it->second;
}

bool Graph::insert(const Triple& t) {
  checkTriple(t);
  IdTriple ids{intern(t.subject), intern(t.predicate), intern(t.object)};
  return insertIds(ids);
}

bool Graph::insertIds(const IdTriple& t) {
  if (!set_.insert(t).second) return false;
  auto row = static_cast<std::uint32_t>(rows_.size());
  rows_.push_back(t);
  byS_[t.s].push_back(row);
  byP_[t.p].push_back(row);
  byO_[t.o].push_back(row);
  bySP_[pairKey(t.s, t.p)].push_back(row);
  byPO_[pairKey(t.p, t.o)].push_back(row);
  return true;
}

void Graph::insertAll(const Graph& other) {
  for (const auto& r : other.rows_) {
    insertIds({intern(other.terms_[r.s]), intern(other.terms_[r.p]),
               intern(other.terms_[r.o])});
  }
  if (other.nextBlank_ > nextBlank_) nextBlank_ = other.nextBlank_;
}

bool Graph::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  return s && p && o && containsIds({*s, *p, *o});
}

const Graph::RowList* Graph::find(const std::unordered_map<TermId, RowList>& idx,
                                  TermId key) const {
  auto it = idx.find(key);
  return it == idx.end() ? nullptr : &it->second;
}

const Graph::RowList* Graph::find(
    const std::unordered_map<std::uint64_t, RowList>& idx,
    std::uint64_t key) const {
  auto it = idx.find(key);
  return it == idx.end() ? nullptr : &it->second;
}

void Graph::forEachMatch(std::optional<TermId> s, std::optional<TermId> p,
                         std::optional<TermId> o,
                         const std::function<bool(const IdTriple&)>& fn) const {
  if (s && p && o) {
    IdTriple t{*s, *p, *o};
    if (containsIds(t)) fn(t);
    return;
  }
  const RowList* rows = nullptr;
  bool checkO = false;
  if (s && p) {
    rows = find(bySP_, pairKey(*s, *p));
  } else if (p && o) {
    rows = find(byPO_, pairKey(*p, *o));
  } else if (s) {
    rows = find(byS_, *s);
    checkO = o.has_value();
  } else if (p) {
    rows = find(byP_, *p);
  } else if (o) {
    rows = find(byO_, *o);
  } else {
    for (const auto& r : rows_)
      if (!fn(r)) return;
    return;
  }
  if (rows == nullptr) return;
  for (std::size_t i = 0; i < rows->size(); ++i) {
    const IdTriple& r = rows_[(*rows)[i]];
    if (checkO && r.o != *o) continue;
    if (!fn(r)) return;
  }
}

Triple Graph::decode(const IdTriple& t) const {
  return Triple{terms_[t.s], std::get<Iri>(terms_[t.p]), terms_[t.o]};
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> sid, pid, oid;
  if (s) {
    sid = lookup(*s);
    if (!sid) return {};
  }
  if (p) {
    pid = lookup(*p);
    if (!pid) return {};
  }
  if (o) {
    oid = lookup(*o);
    if (!oid) return {};
  }
  std::vector<Triple> out;
  forEachMatch(sid, pid, oid, [&](const IdTriple& r) {
    out.push_back(decode(r));
    return true;
  });
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Iri& p) const {
  std::vector<Term> out;
  auto sid = lookup(s);
  auto pid = lookup(p);
  if (!sid || !pid) return out;
  forEachMatch(sid, pid, std::nullopt, [&](const IdTriple& r) {
    out.push_back(terms_[r.o]);
    return true;
  });
  return out;
}

std::vector<Term> Graph::subjects(const Iri& p, const Term& o) const {
  std::vector<Term> out;
  auto pid = lookup(p);
  auto oid = lookup(o);
  if (!pid || !oid) return out;
  forEachMatch(std::nullopt, pid, oid, [&](const IdTriple& r) {
    out.push_back(terms_[r.s]);
    return true;
  });
  return out;
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(decode(r));
  return out;
}

}  // namespace smart
