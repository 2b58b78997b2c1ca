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

#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "gfoart/kb.hpp"

namespace gfoart {

struct Term {
  enum class Kind { kVariable, kConstant };

  Kind kind = Kind::kVariable;
  std::string name;

  bool is_variable() const noexcept { return kind == Kind::kVariable; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

Term var(std::string name);
Term constant(std::string name);

// Immutable formula tree of the guarded first-order fragment. Nodes are shared,
// so copies are cheap.
class Formula {
 public:
  enum class Kind {
    kAtom,
    kEq,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kForall,
    kExists,
    kExistsUnique,
  };

  Kind kind() const noexcept;
  // Atom only.
  const std::string& predicate() const noexcept;
  // Atom arguments, or the two sides of Eq.
  const std::vector<Term>& terms() const noexcept;
  // Not: 1, And/Or: n, Implies: 2 (antecedent, consequent), quantifiers: 1.
  const std::vector<Formula>& children() const noexcept;
  const Formula& child(std::size_t i) const { return children().at(i); }
  // Quantifiers only.
  const std::string& variable() const noexcept;

  bool is_quantifier() const noexcept {
    return kind() == Kind::kForall || kind() == Kind::kExists ||
           kind() == Kind::kExistsUnique;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  friend Formula make_formula(Kind, std::string, std::vector<Term>,
                              std::vector<Formula>);

  std::shared_ptr<const Node> node_;
};

Formula atom(std::string predicate, std::vector<Term> args);
Formula eq(Term lhs, Term rhs);
Formula negate(Formula f);
Formula conj(std::vector<Formula> fs);
Formula disj(std::vector<Formula> fs);
Formula implies(Formula antecedent, Formula consequent);
// a ↔ b, expanded to (a → b) ∧ (b → a).
Formula iff(Formula a, Formula b);
Formula forall(std::string v, Formula f);
Formula exists(std::string v, Formula f);
Formula exists_unique(std::string v, Formula f);
// Nested quantifiers, outermost first.
Formula forall(const std::vector<std::string>& vs, Formula f);
Formula exists(const std::vector<std::string>& vs, Formula f);
Formula forall(std::initializer_list<std::string> vs, Formula f);
Formula exists(std::initializer_list<std::string> vs, Formula f);

std::set<std::string> free_variables(const Formula& f);
// Capture-avoiding only in the sense the fragment needs: bound occurrences of
// `v` are left alone. `replacement` must not be captured by an inner binder.
Formula substitute(const Formula& f, const std::string& v,
                   const Term& replacement);
// ∃!v f  ≡  ∃v (f ∧ ∀u (f[v:=u] → u = v)) with a fresh u.
Formula expand_exists_unique(const Formula& f);

// Logical notation, e.g. "∀x (MOB(x) → ∃y mbd(y, x))".
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

using Binding = std::map<std::string, EntityId>;

std::string to_string(const Binding& b);

}  // namespace gfoart
