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

#include <string>
#include <string_view>
#include <vector>

#include "gfoart/formula.hpp"
#include "gfoart/kb.hpp"

namespace gfoart {

// Tarskian satisfaction by structural recursion. Quantifiers range over
// kb.entities() exactly and nothing is cached: this is the reference
// semantics the indexed evaluator is tested against.
// Throws kUnboundVariable, kUnknownPredicate, kArityMismatch.
bool eval_naive(const KnowledgeBase& kb, const Formula& f,
                const Binding& binding = {});

struct FormulaDiagnostic {
  enum class Kind { kUnboundVariable, kUnknownPredicate, kArityMismatch };
  Kind kind;
  std::string message;

  friend bool operator==(const FormulaDiagnostic&,
                         const FormulaDiagnostic&) = default;
};

// Empty result means the closed formula is evaluable against `signature`.
std::vector<FormulaDiagnostic> well_formed(const Formula& f,
                                           const Signature& signature);

// One universally quantified implication. A closed constraint-shaped formula
// is either a single clause or a conjunction of clauses.
//
//   ∀v1..vk (G1 ∨ ... ∨ Gm → body)
//
// Each Gi is a conjunction of positive atoms; variables not covered by a
// disjunct's atoms are enumerated over the whole domain, so a missing guard
// (k > 0, m = 0) is allowed but enumerates every binding.
struct ConstraintClause {
  std::vector<std::string> variables;
  std::vector<std::vector<Formula>> guard;
  Formula body;
  // The quantifier-free part, `guard → body` (or just body without guard).
  Formula matrix;
};

// Throws kNotConstraintShape.
std::vector<ConstraintClause> constraint_clauses(const Formula& f);
bool is_constraint_shaped(const Formula& f) noexcept;

struct Witness {
  std::string axiom_id;
  Binding binding;
  // Index into constraint_clauses() of the violated clause.
  std::size_t clause = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Every binding of the clause variables that satisfies a guard disjunct but
// falsifies the body, ordered by (binding, clause). Candidates come from
// per-predicate indexes rather than domain enumeration.
// Throws kNotConstraintShape.
std::vector<Witness> find_violations(const KnowledgeBase& kb,
                                     std::string_view axiom_id,
                                     const Formula& axiom);

// Bindings of the variables in a conjunction of positive atoms, in
// lexicographic order. Shares the index join used by find_violations.
std::vector<Binding> match_conjunction(const KnowledgeBase& kb,
                                       const std::vector<Formula>& atoms);

}  // namespace gfoart
