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

#include "smart/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "smart/errors.hpp"
#include "smart/ontology.hpp"

namespace smart {

std::string toString(const SubQuery& q) {
  auto opt = [](const std::optional<Iri>& t) {
    return t ? std::string(t->localName()) : std::string("null");
  };
  return "(" + opt(q.inputType) + ", " + std::string(q.predicate.localName()) +
         ", " + opt(q.outputType) + ")";
}

namespace {

constexpr std::size_t kMaxWindow = 4;

bool isStopWord(const std::string& w) {
  return w == "the" || w == "a" || w == "an";
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  // A sentence may end with "?" or ".".
  while (!out.empty()) {
    std::string& last = out.back();
    while (!last.empty() && (last.back() == '?' || last.back() == '.' ||
                             last.back() == '!'))
      last.pop_back();
    if (!last.empty()) break;
    out.pop_back();
  }
  return out;
}

struct Group {
  std::optional<Iri> cls;
  Iri predicate;
};

/// Backtracking parser over the words between "find" and "this".
class GroupParser {
 public:
  GroupParser(const LabelIndex& labels, const std::vector<std::string>& words,
              std::size_t end)
      : labels_(labels), words_(words), end_(end) {}

  bool parse(std::size_t pos) {
    pos = skipStopWords(pos);
    if (pos >= end_) return true;
    // A class phrase must leave at least one word for the predicate.
    const std::size_t maxClass = std::min(kMaxWindow, end_ - pos - 1);
    for (std::size_t lc = maxClass; lc >= 1; --lc) {
      auto found = labels_.lookup(phrase(pos, lc), LabelKind::kClass);
      if (found.size() > 1) noteAmbiguous(pos, lc, found);
      if (found.size() != 1) continue;
      if (parsePredicate(skipStopWords(pos + lc), *found.begin())) return true;
    }
    return parsePredicate(pos, std::nullopt);
  }

  std::vector<Group>& groups() { return groups_; }

  [[noreturn]] void fail() const {
    if (failure_.ambiguous)
      throw AmbiguousLabel(failure_.phrase, failure_.candidates);
    throw UnknownLabel(failure_.phrase, failure_.position);
  }

 private:
  bool parsePredicate(std::size_t pos, const std::optional<Iri>& cls) {
    if (pos >= end_) {
      noteUnknown(pos, 0);
      return false;
    }
    for (std::size_t lp = std::min(kMaxWindow, end_ - pos); lp >= 1; --lp) {
      std::set<Iri> found;
      for (const Iri& iri : labels_.lookup(phrase(pos, lp), LabelKind::kPredicate))
        if (labels_.isObjectProperty(iri)) found.insert(iri);
      if (found.size() > 1) noteAmbiguous(pos, lp, found);
      if (found.size() != 1) continue;
      groups_.push_back({cls, *found.begin()});
      if (parse(pos + lp)) return true;
      groups_.pop_back();
    }
    noteUnknown(pos, std::min(kMaxWindow, end_ - pos));
    return false;
  }

  std::size_t skipStopWords(std::size_t pos) const {
    while (pos < end_ && isStopWord(words_[pos])) ++pos;
    return pos;
  }

  std::string phrase(std::size_t pos, std::size_t len) const {
    std::string out;
    for (std::size_t i = pos; i < pos + len && i < words_.size(); ++i) {
      if (!out.empty()) out.push_back(' ');
      out += words_[i];
    }
    return out;
  }

  void noteUnknown(std::size_t pos, std::size_t len) {
    if (seen_ && (pos < failure_.position ||
                  (pos == failure_.position && failure_.ambiguous)))
      return;
    if (seen_ && pos == failure_.position && len <= failure_.length) return;
    seen_ = true;
    failure_ = {pos, len, false, phrase(pos, len), ""};
  }

  void noteAmbiguous(std::size_t pos, std::size_t len,
                     const std::set<Iri>& found) {
    if (seen_ && pos < failure_.position) return;
    if (seen_ && pos == failure_.position && failure_.ambiguous) return;
    std::string names;
    for (const Iri& iri : found) {
      if (!names.empty()) names += ", ";
      names += iri.str();
    }
    seen_ = true;
    failure_ = {pos, len, true, phrase(pos, len), names};
  }

  struct Failure {
    std::size_t position = 0;
    std::size_t length = 0;
    bool ambiguous = false;
    std::string phrase;
    std::string candidates;
  };

  const LabelIndex& labels_;
  const std::vector<std::string>& words_;
  std::size_t end_;
  std::vector<Group> groups_;
  bool seen_ = false;
  Failure failure_;
};

}  // namespace

QueryPlan parseQuery(const Graph& graph, std::string_view text) {
  const auto words = tokenize(text);
  if (words.empty() || words.front() != "find")
    throw Error("MissingFind", "a query starts with 'find'",
                {{"position", "0"}});

  std::vector<std::size_t> thisAt;
  for (std::size_t i = 1; i < words.size(); ++i)
    if (words[i] == "this") thisAt.push_back(i);
  if (thisAt.empty())
    throw Error("MissingThis", "a query needs 'this' before its final class",
                {{"position", std::to_string(words.size())}});
  if (thisAt.size() > 1)
    throw Error("MultipleThis", "'this' may appear only once",
                {{"position", std::to_string(thisAt[1])}});
  const std::size_t thisPos = thisAt.front();

  LabelIndex labels(graph);
  GroupParser parser(labels, words, thisPos);
  std::size_t firstWord = 1;
  while (firstWord < thisPos && isStopWord(words[firstWord])) ++firstWord;
  if (firstWord == thisPos)
    throw Error("EmptyPlan", "no predicate between 'find' and 'this'",
                {{"position", std::to_string(thisPos)}});
  if (!parser.parse(firstWord)) parser.fail();

  std::size_t seedAt = thisPos + 1;
  while (seedAt < words.size() && isStopWord(words[seedAt])) ++seedAt;
  if (seedAt >= words.size())
    throw Error("MissingClass", "a class phrase must follow 'this'",
                {{"position", std::to_string(seedAt)}});
  std::string seedPhrase;
  for (std::size_t i = seedAt; i < words.size(); ++i) {
    if (!seedPhrase.empty()) seedPhrase.push_back(' ');
    seedPhrase += words[i];
  }
  auto seed = labels.lookup(seedPhrase, LabelKind::kClass);
  if (seed.empty()) throw UnknownLabel(seedPhrase, seedAt);
  if (seed.size() > 1) {
    std::string names;
    for (const Iri& iri : seed) {
      if (!names.empty()) names += ", ";
      names += iri.str();
    }
    throw AmbiguousLabel(seedPhrase, names);
  }

  QueryPlan plan;
  plan.seedType = *seed.begin();
  const auto& groups = parser.groups();
  std::optional<Iri> input = plan.seedType;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    plan.stages.push_back({input, it->predicate, it->cls});
    input = it->cls;
  }
  return plan;
}

}  // namespace smart
