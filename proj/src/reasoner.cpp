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

#include "smart/reasoner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

#include "smart/errors.hpp"
#include "smart/vocabulary.hpp"

namespace smart {

namespace {

Variable var(const char* name) { return Variable{name}; }

TriplePattern pat(PatternTerm s, PatternTerm p, PatternTerm o) {
  return TriplePattern{std::move(s), std::move(p), std::move(o)};
}

void collectVariables(const TriplePattern& t, std::set<std::string>& out) {
  for (const PatternTerm* pt : {&t.subject, &t.predicate, &t.object})
    if (const auto* v = std::get_if<Variable>(pt)) out.insert(v->name);
}

// A pattern slot is either a variable index or a constant term id.
struct Slot {
  bool isVar = false;
  std::size_t index = 0;
};

struct CompiledAtom {
  std::array<Slot, 3> slots;
};

struct CompiledRule {
  std::vector<CompiledAtom> body;
  CompiledAtom head;
  std::size_t varCount = 0;
};

using Bindings = std::vector<std::optional<TermId>>;

class Engine {
 public:
  Engine(Graph& graph, std::span<const Rule> rules) : graph_(graph) {
    for (const Rule& r : rules) rules_.push_back(compile(r));
  }

  void run(std::size_t budget) {
    std::size_t derived = 0;
    std::vector<IdTriple> heads;
    for (std::size_t cursor = 0; cursor < graph_.size(); ++cursor) {
      const IdTriple delta = graph_.row(cursor);
      heads.clear();
      for (const CompiledRule& rule : rules_) {
        for (std::size_t i = 0; i < rule.body.size(); ++i) {
          Bindings b(rule.varCount);
          if (!unify(rule.body[i], delta, b)) continue;
          std::vector<std::size_t> rest;
          for (std::size_t j = 0; j < rule.body.size(); ++j)
            if (j != i) rest.push_back(j);
          join(rule, rest, b, heads);
        }
      }
      for (const IdTriple& h : heads) {
        if (!admissible(h)) continue;
        if (graph_.insertIds(h) && ++derived > budget)
          throw SaturationBudgetExceeded(budget);
      }
    }
  }

 private:
  CompiledRule compile(const Rule& rule) {
    checkRule(rule);
    std::map<std::string, std::size_t> vars;
    auto slot = [&](const PatternTerm& pt) {
      Slot s;
      if (const auto* v = std::get_if<Variable>(&pt)) {
        s.isVar = true;
        s.index = vars.try_emplace(v->name, vars.size()).first->second;
      } else {
        s.index = graph_.intern(std::get<Term>(pt));
      }
      return s;
    };
    auto atom = [&](const TriplePattern& t) {
      return CompiledAtom{{slot(t.subject), slot(t.predicate), slot(t.object)}};
    };
    CompiledRule out;
    for (const auto& t : rule.body) out.body.push_back(atom(t));
    out.head = atom(rule.head);
    out.varCount = vars.size();
    return out;
  }

  static bool unify(const CompiledAtom& a, const IdTriple& t, Bindings& b) {
    const std::array<TermId, 3> vals{t.s, t.p, t.o};
    for (std::size_t k = 0; k < 3; ++k) {
      const Slot& s = a.slots[k];
      if (!s.isVar) {
        if (s.index != vals[k]) return false;
      } else if (b[s.index]) {
        if (*b[s.index] != vals[k]) return false;
      } else {
        b[s.index] = vals[k];
      }
    }
    return true;
  }

  static std::optional<TermId> resolve(const Slot& s, const Bindings& b) {
    if (!s.isVar) return static_cast<TermId>(s.index);
    return b[s.index];
  }

  static int boundCount(const CompiledAtom& a, const Bindings& b) {
    int n = 0;
    for (const Slot& s : a.slots) n += resolve(s, b).has_value() ? 1 : 0;
    return n;
  }

  void join(const CompiledRule& rule, std::vector<std::size_t> rest,
            const Bindings& b, std::vector<IdTriple>& heads) const {
    if (rest.empty()) {
      heads.push_back({*resolve(rule.head.slots[0], b),
                       *resolve(rule.head.slots[1], b),
                       *resolve(rule.head.slots[2], b)});
      return;
    }
    auto best = std::max_element(
        rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
          return boundCount(rule.body[x], b) < boundCount(rule.body[y], b);
        });
    const CompiledAtom& atom = rule.body[*best];
    rest.erase(best);
    graph_.forEachMatch(resolve(atom.slots[0], b), resolve(atom.slots[1], b),
                        resolve(atom.slots[2], b), [&](const IdTriple& t) {
                          Bindings next = b;
                          if (unify(atom, t, next)) join(rule, rest, next, heads);
                          return true;
                        });
  }

  bool admissible(const IdTriple& h) const {
    return !isLiteral(graph_.term(h.s)) && isIri(graph_.term(h.p));
  }

  Graph& graph_;
  std::vector<CompiledRule> rules_;
};

}  // namespace

void checkRule(const Rule& rule) {
  if (rule.body.empty()) throw InvalidRule(rule.name, "empty body");
  std::set<std::string> bodyVars, headVars;
  for (const auto& t : rule.body) collectVariables(t, bodyVars);
  collectVariables(rule.head, headVars);
  for (const auto& v : headVars)
    if (!bodyVars.count(v))
      throw InvalidRule(rule.name, "head variable ?" + v + " not bound by body");
}

const std::vector<Rule>& closureRules() {
  using namespace vocab;
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> r;
    r.push_back({"subClassOf-transitive",
                 {pat(var("a"), Term(subClassOf), var("b")),
                  pat(var("b"), Term(subClassOf), var("c"))},
                 pat(var("a"), Term(subClassOf), var("c"))});
    r.push_back({"type-inheritance",
                 {pat(var("x"), Term(rdfType), var("c")),
                  pat(var("c"), Term(subClassOf), var("d"))},
                 pat(var("x"), Term(rdfType), var("d"))});
    r.push_back({"subPropertyOf-transitive",
                 {pat(var("p"), Term(subPropertyOf), var("q")),
                  pat(var("q"), Term(subPropertyOf), var("r"))},
                 pat(var("p"), Term(subPropertyOf), var("r"))});
    r.push_back({"subPropertyOf-lift",
                 {pat(var("x"), var("p"), var("y")),
                  pat(var("p"), Term(subPropertyOf), var("q"))},
                 pat(var("x"), var("q"), var("y"))});
    r.push_back({"inverseOf-symmetric",
                 {pat(var("p"), Term(inverseOf), var("q"))},
                 pat(var("q"), Term(inverseOf), var("p"))});
    r.push_back({"inverseOf-apply",
                 {pat(var("x"), var("p"), var("y")),
                  pat(var("p"), Term(inverseOf), var("q"))},
                 pat(var("y"), var("q"), var("x"))});
    r.push_back({"equivalentProperty-symmetric",
                 {pat(var("p"), Term(equivalentProperty), var("q"))},
                 pat(var("q"), Term(equivalentProperty), var("p"))});
    r.push_back({"equivalentProperty-transitive",
                 {pat(var("p"), Term(equivalentProperty), var("q")),
                  pat(var("q"), Term(equivalentProperty), var("r"))},
                 pat(var("p"), Term(equivalentProperty), var("r"))});
    r.push_back({"equivalentProperty-apply",
                 {pat(var("x"), var("p"), var("y")),
                  pat(var("p"), Term(equivalentProperty), var("q"))},
                 pat(var("x"), var("q"), var("y"))});
    r.push_back({"transitive-property",
                 {pat(var("p"), Term(rdfType), Term(TransitiveProperty)),
                  pat(var("x"), var("p"), var("y")),
                  pat(var("y"), var("p"), var("z"))},
                 pat(var("x"), var("p"), var("z"))});
    return r;
  }();
  return rules;
}

const std::vector<Rule>& serviceRules() {
  using namespace vocab;
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> r;
    r.push_back({"root-input",
                 {pat(var("rootInput"), Term(rdfType), Term(RootInputParameter)),
                  pat(var("service"), Term(hasRestInput), var("restInput")),
                  pat(var("restInput"), Term(subInputOf), var("rootInput"))},
                 pat(var("rootInput"), Term(rootInputOf), var("service"))});
    r.push_back(
        {"root-output",
         {pat(var("rootOutput"), Term(rdfType), Term(RootOutputParameter)),
          pat(var("service"), Term(hasRestOutput), var("restOutput")),
          pat(var("restOutput"), Term(subOutputOf), var("rootOutput"))},
         pat(var("rootOutput"), Term(rootOutputOf), var("service"))});
    r.push_back({"io-relation-root",
                 {pat(var("rparam"), Term(rootParameterOf), var("service")),
                  pat(var("rel"), Term(subject), var("rparam"))},
                 pat(var("service"), Term(hasIORelation), var("rel"))});
    r.push_back({"io-relation-sub",
                 {pat(var("rparam"), Term(rootParameterOf), var("service")),
                  pat(var("sparam"), Term(subParameterOf), var("rparam")),
                  pat(var("rel"), Term(subject), var("sparam"))},
                 pat(var("service"), Term(hasIORelation), var("rel"))});
    return r;
  }();
  return rules;
}

Graph saturate(Graph graph, std::span<const Rule> extraRules,
               const SaturationOptions& options) {
  std::vector<Rule> rules = closureRules();
  rules.insert(rules.end(), serviceRules().begin(), serviceRules().end());
  rules.insert(rules.end(), extraRules.begin(), extraRules.end());
  Engine(graph, rules).run(options.budget);
  return graph;
}

}  // namespace smart
