// Copyright 2026 The gfoart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfoart/folk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "gfoart/error.hpp"

namespace gfoart {

namespace {

// Walks every atom and rejects predicates the KB cannot interpret, so errors
// surface even when a quantifier ranges over an empty domain.
void require_interpretable(const Formula& f, const Signature& sig) {
  if (f.kind() == Formula::Kind::kAtom) {
    const auto& p = sig.at(f.predicate());
    if (p.arity() != f.terms().size()) {
      throw Error(ErrorCode::kArityMismatch,
                  p.name + " expects " + std::to_string(p.arity()) +
                      " arguments, got " + std::to_string(f.terms().size()));
    }
  }
  for (const auto& c : f.children()) require_interpretable(c, sig);
}

// Restores a binding slot on scope exit.
class ScopedBind {
 public:
  ScopedBind(Binding& b, const std::string& v, const EntityId& value)
      : b_(b), v_(v) {
    auto it = b_.find(v_);
    if (it != b_.end()) {
      saved_ = it->second;
      it->second = value;
    } else {
      b_.emplace(v_, value);
    }
  }
  ~ScopedBind() {
    if (saved_) {
      b_.at(v_) = *saved_;
    } else {
      b_.erase(v_);
    }
  }
  ScopedBind(const ScopedBind&) = delete;
  ScopedBind& operator=(const ScopedBind&) = delete;

 private:
  Binding& b_;
  const std::string& v_;
  std::optional<EntityId> saved_;
};

EntityId resolve(const Term& t, const Binding& b) {
  if (!t.is_variable()) return EntityId(t.name);
  auto it = b.find(t.name);
  if (it == b.end()) throw Error(ErrorCode::kUnboundVariable, t.name);
  return it->second;
}

class NaiveEvaluator {
 public:
  NaiveEvaluator(const KnowledgeBase& kb, Binding& b)
      : kb_(kb), domain_(kb.entities()), b_(b) {}

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        Tuple args;
        args.reserve(f.terms().size());
        for (const auto& t : f.terms()) args.push_back(resolve(t, b_));
        return kb_.holds(f.predicate(), args);
      }
      case Formula::Kind::kEq:
        return resolve(f.terms()[0], b_) == resolve(f.terms()[1], b_);
      case Formula::Kind::kNot:
        return !eval(f.child(0));
      case Formula::Kind::kAnd:
        for (const auto& c : f.children()) {
          if (!eval(c)) return false;
        }
        return true;
      case Formula::Kind::kOr:
        for (const auto& c : f.children()) {
          if (eval(c)) return true;
        }
        return false;
      case Formula::Kind::kImplies:
        return !eval(f.child(0)) || eval(f.child(1));
      case Formula::Kind::kForall:
        for (const auto& e : domain_) {
          ScopedBind s(b_, f.variable(), e);
          if (!eval(f.child(0))) return false;
        }
        return true;
      case Formula::Kind::kExists:
        for (const auto& e : domain_) {
          ScopedBind s(b_, f.variable(), e);
          if (eval(f.child(0))) return true;
        }
        return false;
      case Formula::Kind::kExistsUnique:
        // Definitional reading: some v satisfies f and every u satisfying f
        // equals v.
        for (const auto& v : domain_) {
          bool holds_v;
          {
            ScopedBind s(b_, f.variable(), v);
            holds_v = eval(f.child(0));
          }
          if (!holds_v) continue;
          bool unique = true;
          for (const auto& u : domain_) {
            ScopedBind s(b_, f.variable(), u);
            if (eval(f.child(0)) && !(u == v)) {
              unique = false;
              break;
            }
          }
          if (unique) return true;
        }
        return false;
    }
    return false;
  }

 private:
  const KnowledgeBase& kb_;
  std::vector<EntityId> domain_;
  Binding& b_;
};

// Per-predicate tuple lists plus a (position, entity) -> tuple-offsets map.
class Index {
 public:
  struct Table {
    std::vector<Tuple> tuples;
    std::vector<std::map<EntityId, std::vector<std::size_t>>> by_position;
  };

  explicit Index(const KnowledgeBase& kb) : kb_(kb), domain_(kb.entities()) {
    for (const auto& name : kb.used_predicates()) {
      Table t;
      t.tuples = kb.tuples(name);
      const std::size_t arity = t.tuples.empty() ? 0 : t.tuples[0].size();
      t.by_position.resize(arity);
      for (std::size_t i = 0; i < t.tuples.size(); ++i) {
        for (std::size_t p = 0; p < arity; ++p) {
          t.by_position[p][t.tuples[i][p]].push_back(i);
        }
      }
      tables_.emplace(name, std::move(t));
    }
  }

  const KnowledgeBase& kb() const { return kb_; }
  const std::vector<EntityId>& domain() const { return domain_; }

  const Table* table(const std::string& predicate) const {
    auto it = tables_.find(predicate);
    return it == tables_.end() ? nullptr : &it->second;
  }

  // Calls `fn(tuple)` for every tuple of `a` consistent with the bound terms
  // in `b`. Terms naming `shadowed` are treated as unbound.
  template <typename Fn>
  void scan(const Formula& a, const Binding& b, const std::string* shadowed,
            Fn&& fn) const {
    const Table* t = table(a.predicate());
    if (!t || t->by_position.size() != a.terms().size()) return;
    const auto& terms = a.terms();
    std::vector<std::optional<EntityId>> fixed(terms.size());
    const std::vector<std::size_t>* best = nullptr;
    bool any_fixed = false;
    for (std::size_t p = 0; p < terms.size(); ++p) {
      const Term& term = terms[p];
      if (!term.is_variable()) {
        if (!is_valid_identifier(term.name)) return;
        fixed[p] = EntityId(term.name);
      } else if (!(shadowed && *shadowed == term.name)) {
        auto it = b.find(term.name);
        if (it != b.end()) fixed[p] = it->second;
      }
      if (!fixed[p]) continue;
      any_fixed = true;
      auto hit = t->by_position[p].find(*fixed[p]);
      if (hit == t->by_position[p].end()) return;
      if (!best || hit->second.size() < best->size()) best = &hit->second;
    }
    auto consider = [&](const Tuple& tup) {
      for (std::size_t p = 0; p < terms.size(); ++p) {
        if (fixed[p] && !(tup[p] == *fixed[p])) return;
      }
      // Repeated variables within one atom must agree.
      for (std::size_t p = 0; p < terms.size(); ++p) {
        if (fixed[p] || !terms[p].is_variable()) continue;
        for (std::size_t q = p + 1; q < terms.size(); ++q) {
          if (!fixed[q] && terms[q].is_variable() &&
              terms[q].name == terms[p].name && !(tup[p] == tup[q])) {
            return;
          }
        }
      }
      fn(tup);
    };
    if (any_fixed) {
      for (std::size_t i : *best) consider(t->tuples[i]);
    } else {
      for (const auto& tup : t->tuples) consider(tup);
    }
  }

 private:
  const KnowledgeBase& kb_;
  std::vector<EntityId> domain_;
  std::map<std::string, Table, std::less<>> tables_;
};

void flatten_conjuncts(const Formula& f, std::vector<const Formula*>& out) {
  if (f.kind() == Formula::Kind::kAnd) {
    for (const auto& c : f.children()) flatten_conjuncts(c, out);
  } else {
    out.push_back(&f);
  }
}

bool mentions(const Formula& a, const std::string& v) {
  return std::any_of(a.terms().begin(), a.terms().end(), [&](const Term& t) {
    return t.is_variable() && t.name == v;
  });
}

// Evaluates bodies using the index: quantified variables are drawn from the
// tuples of a positive atom that must hold, instead of the whole domain.
class IndexedEvaluator {
 public:
  IndexedEvaluator(const Index& index, Binding& b) : ix_(index), b_(b) {}

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        Tuple args;
        args.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
          if (!t.is_variable() && !is_valid_identifier(t.name)) return false;
          args.push_back(resolve(t, b_));
        }
        return ix_.kb().contains(f.predicate(), args);
      }
      case Formula::Kind::kEq:
        return resolve(f.terms()[0], b_) == resolve(f.terms()[1], b_);
      case Formula::Kind::kNot:
        return !eval(f.child(0));
      case Formula::Kind::kAnd:
        for (const auto& c : f.children()) {
          if (!eval(c)) return false;
        }
        return true;
      case Formula::Kind::kOr:
        for (const auto& c : f.children()) {
          if (eval(c)) return true;
        }
        return false;
      case Formula::Kind::kImplies:
        return !eval(f.child(0)) || eval(f.child(1));
      case Formula::Kind::kForall: {
        const Formula& body = f.child(0);
        const bool guarded = body.kind() == Formula::Kind::kImplies;
        auto cands = candidates(f.variable(), guarded ? body.child(0) : body,
                                guarded);
        const auto& range = cands ? *cands : ix_.domain();
        for (const auto& e : range) {
          ScopedBind s(b_, f.variable(), e);
          if (!eval(body)) return false;
        }
        return true;
      }
      case Formula::Kind::kExists: {
        auto cands = candidates(f.variable(), f.child(0), true);
        const auto& range = cands ? *cands : ix_.domain();
        for (const auto& e : range) {
          ScopedBind s(b_, f.variable(), e);
          if (eval(f.child(0))) return true;
        }
        return false;
      }
      case Formula::Kind::kExistsUnique: {
        auto cands = candidates(f.variable(), f.child(0), true);
        const auto& range = cands ? *cands : ix_.domain();
        int count = 0;
        for (const auto& e : range) {
          ScopedBind s(b_, f.variable(), e);
          if (eval(f.child(0)) && ++count > 1) return false;
        }
        return count == 1;
      }
    }
    return false;
  }

 private:
  // Values of `v` that can make `f` true, when some top-level conjunct of `f`
  // is a positive atom over `v`; nullopt means "any entity".
  std::optional<std::vector<EntityId>> candidates(const std::string& v,
                                                  const Formula& f,
                                                  bool use) const {
    if (!use) return std::nullopt;
    std::vector<const Formula*> conjuncts;
    flatten_conjuncts(f, conjuncts);
    for (const Formula* c : conjuncts) {
      if (c->kind() != Formula::Kind::kAtom || !mentions(*c, v)) continue;
      std::set<EntityId> out;
      std::size_t pos = 0;
      while (!(c->terms()[pos].is_variable() && c->terms()[pos].name == v)) {
        ++pos;
      }
      ix_.scan(*c, b_, &v, [&](const Tuple& t) { out.insert(t[pos]); });
      return std::vector<EntityId>(out.begin(), out.end());
    }
    return std::nullopt;
  }

  const Index& ix_;
  Binding& b_;
};

// Backtracking join over positive atoms, most-constrained atom first.
void join(const Index& ix, std::vector<const Formula*> pending, Binding& b,
          const std::function<void()>& emit) {
  if (pending.empty()) {
    emit();
    return;
  }
  auto bound_count = [&](const Formula* a) {
    std::size_t n = 0;
    for (const auto& t : a->terms()) {
      if (!t.is_variable() || b.contains(t.name)) ++n;
    }
    return n;
  };
  auto pick = std::max_element(
      pending.begin(), pending.end(),
      [&](auto* x, auto* y) { return bound_count(x) < bound_count(y); });
  const Formula* a = *pick;
  pending.erase(pick);
  ix.scan(*a, b, nullptr, [&](const Tuple& tup) {
    std::vector<std::string> added;
    for (std::size_t p = 0; p < tup.size(); ++p) {
      const Term& t = a->terms()[p];
      if (t.is_variable() && !b.contains(t.name)) {
        b.emplace(t.name, tup[p]);
        added.push_back(t.name);
      }
    }
    join(ix, pending, b, emit);
    for (const auto& v : added) b.erase(v);
  });
}

void enumerate_rest(const Index& ix, const std::vector<std::string>& vars,
                    std::size_t i, Binding& b,
                    const std::function<void()>& emit) {
  if (i == vars.size()) {
    emit();
    return;
  }
  if (b.contains(vars[i])) {
    enumerate_rest(ix, vars, i + 1, b, emit);
    return;
  }
  for (const auto& e : ix.domain()) {
    b.emplace(vars[i], e);
    enumerate_rest(ix, vars, i + 1, b, emit);
    b.erase(vars[i]);
  }
}

bool is_positive_conjunction(const Formula& f) {
  if (f.kind() == Formula::Kind::kAtom) return true;
  if (f.kind() != Formula::Kind::kAnd || f.children().empty()) return false;
  return std::all_of(f.children().begin(), f.children().end(),
                     [](const Formula& c) {
                       return c.kind() == Formula::Kind::kAtom;
                     });
}

std::vector<Formula> atoms_of(const Formula& f) {
  if (f.kind() == Formula::Kind::kAtom) return {f};
  return f.children();
}

std::optional<std::vector<std::vector<Formula>>> guard_dnf(const Formula& g) {
  if (is_positive_conjunction(g)) return std::vector<std::vector<Formula>>{atoms_of(g)};
  if (g.kind() != Formula::Kind::kOr || g.children().empty()) {
    return std::nullopt;
  }
  std::vector<std::vector<Formula>> out;
  for (const auto& d : g.children()) {
    if (!is_positive_conjunction(d)) return std::nullopt;
    out.push_back(atoms_of(d));
  }
  return out;
}

ConstraintClause make_clause(const Formula& f) {
  if (f.kind() != Formula::Kind::kForall) {
    throw Error(ErrorCode::kNotConstraintShape,
                "expected a universally quantified clause: " + to_string(f));
  }
  ConstraintClause c{{}, {}, f, f};
  const Formula* cur = &f;
  while (cur->kind() == Formula::Kind::kForall) {
    if (std::find(c.variables.begin(), c.variables.end(), cur->variable()) ==
        c.variables.end()) {
      c.variables.push_back(cur->variable());
    }
    cur = &cur->child(0);
  }
  c.matrix = *cur;
  c.body = *cur;
  if (cur->kind() == Formula::Kind::kImplies) {
    if (auto dnf = guard_dnf(cur->child(0))) {
      c.guard = std::move(*dnf);
      c.body = cur->child(1);
    }
  }
  return c;
}

}  // namespace

bool eval_naive(const KnowledgeBase& kb, const Formula& f,
                const Binding& binding) {
  for (const auto& v : free_variables(f)) {
    if (!binding.contains(v)) throw Error(ErrorCode::kUnboundVariable, v);
  }
  require_interpretable(f, kb.signature());
  Binding b = binding;
  return NaiveEvaluator(kb, b).eval(f);
}

std::vector<FormulaDiagnostic> well_formed(const Formula& f,
                                           const Signature& signature) {
  std::vector<FormulaDiagnostic> out;
  for (const auto& v : free_variables(f)) {
    out.push_back({FormulaDiagnostic::Kind::kUnboundVariable,
                   "unbound variable " + v});
  }
  std::set<std::string> reported;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == Formula::Kind::kAtom) {
      const auto* p = signature.find(g.predicate());
      if (!p) {
        if (reported.insert(g.predicate()).second) {
          out.push_back({FormulaDiagnostic::Kind::kUnknownPredicate,
                         "unknown predicate " + g.predicate()});
        }
      } else if (p->arity() != g.terms().size()) {
        out.push_back({FormulaDiagnostic::Kind::kArityMismatch,
                       g.predicate() + " expects " +
                           std::to_string(p->arity()) + " arguments, got " +
                           std::to_string(g.terms().size())});
      }
    }
    for (const auto& c : g.children()) walk(c);
  };
  walk(f);
  return out;
}

std::vector<ConstraintClause> constraint_clauses(const Formula& f) {
  if (auto fv = free_variables(f); !fv.empty()) {
    throw Error(ErrorCode::kNotConstraintShape,
                "formula has free variable " + *fv.begin());
  }
  std::vector<ConstraintClause> out;
  if (f.kind() == Formula::Kind::kAnd) {
    for (const auto& c : f.children()) out.push_back(make_clause(c));
  } else {
    out.push_back(make_clause(f));
  }
  return out;
}

bool is_constraint_shaped(const Formula& f) noexcept {
  try {
    constraint_clauses(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Witness> find_violations(const KnowledgeBase& kb,
                                     std::string_view axiom_id,
                                     const Formula& axiom) {
  const auto clauses = constraint_clauses(axiom);
  const Index ix(kb);
  std::set<Witness> found;
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    const auto& clause = clauses[ci];
    Binding b;
    auto check = [&] {
      Binding probe = b;
      if (!IndexedEvaluator(ix, probe).eval(clause.body)) {
        found.insert(Witness{std::string(axiom_id), b, ci});
      }
    };
    auto complete = [&] { enumerate_rest(ix, clause.variables, 0, b, check); };
    if (clause.guard.empty()) {
      complete();
      continue;
    }
    for (const auto& disjunct : clause.guard) {
      std::vector<const Formula*> pending;
      for (const auto& a : disjunct) pending.push_back(&a);
      join(ix, pending, b, complete);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Binding> match_conjunction(const KnowledgeBase& kb,
                                       const std::vector<Formula>& atoms) {
  const Index ix(kb);
  std::set<Binding> found;
  Binding b;
  std::vector<const Formula*> pending;
  for (const auto& a : atoms) pending.push_back(&a);
  join(ix, pending, b, [&] { found.insert(b); });
  return {found.begin(), found.end()};
}

}  // namespace gfoart
