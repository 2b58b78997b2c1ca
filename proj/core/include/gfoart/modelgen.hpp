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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfoart/kb.hpp"
#include "gfoart/vocab.hpp"

namespace gfoart {

inline constexpr std::size_t kMaxModelBound = 12;

enum class Verdict { kSatisfiable, kUnsatisfiableUpToBound };

std::string_view to_string(Verdict v);

struct ModelSearchResult {
  Verdict verdict = Verdict::kUnsatisfiableUpToBound;
  // The bound that was searched.
  std::size_t bound = 0;
  // Present iff satisfiable. Fresh entities are named e1, e2, ...
  std::optional<KnowledgeBase> witness;
  // Candidate assertion sets examined across all entity counts.
  std::size_t models_enumerated = 0;

  bool satisfiable() const noexcept {
    return verdict == Verdict::kSatisfiable;
  }
};

enum class SearchStrategy {
  // Goal-directed: start from must_contain, repeatedly pick the first
  // violation and branch over the single assertions that can repair it.
  // Complete whenever negations, uniqueness bodies and implication
  // antecedents inside axiom bodies are positive-existential, which holds
  // for the whole catalog.
  kChase,
  // Every subset of ground atoms over the relevant predicates, checked with
  // eval_naive. Exponential; only usable on tiny theories and bounds.
  kBruteForce,
};

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::kChase;
  // Brute force only: entity e(i+1) may occur only if e(i) does.
  bool symmetry_breaking = true;
  // Brute force only: refuse (kBoundTooLarge) above this many ground atoms.
  std::size_t max_ground_atoms = 24;
};

// Searches entity counts 0..max_entities in increasing order and returns the
// first model found, so the witness has the minimal entity count. Only
// predicates that occur in the axioms or in must_contain are ever asserted.
// Deterministic. Throws kBoundTooLarge (max_entities > kMaxModelBound) and
// kUnboundVariable, kUnknownPredicate, kArityMismatch for ill-formed axioms.
ModelSearchResult find_model(const std::vector<NamedAxiom>& axioms,
                             std::size_t max_entities,
                             const std::vector<Assertion>& must_contain,
                             SearchOptions options = {});

// Entity count of the model find_model returns, or nullopt.
std::optional<std::size_t> minimal_model_size(
    const std::vector<NamedAxiom>& axioms,
    const std::vector<Assertion>& must_contain, std::size_t bound,
    SearchOptions options = {});

// Human-readable rendering: verdict, bound, count, and the witness as Turtle.
std::string to_string(const ModelSearchResult& result);

struct ScaffoldOptions {
  bool with_requirements = false;
  bool with_space = false;
};

// A compliant single-artifact KB for `kind_name`. Bike and Chair get their
// everyday criterial features; other kinds get one derived feature name.
// Throws kInvalidIdentifier.
KnowledgeBase scaffold_artifact(std::string_view kind_name,
                                ScaffoldOptions options = {});

struct Mutation {
  Assertion deleted;
  KnowledgeBase kb;
};

// One KB per single-assertion deletion, in canonical order.
std::vector<Mutation> mutations(const KnowledgeBase& kb);

}  // namespace gfoart
