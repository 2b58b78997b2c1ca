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

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfoart {

// Identifiers double as Turtle local names, so they are restricted to
// [A-Za-z0-9_] plus '-' after the first character.
bool is_valid_identifier(std::string_view text) noexcept;

class EntityId {
 public:
  // Throws Error(kInvalidIdentifier).
  explicit EntityId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const EntityId&, const EntityId&) = default;
  friend bool operator==(const EntityId&, const EntityId&) = default;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const EntityId& id);

struct PredicateSig {
  std::string name;
  std::vector<std::string> roles;

  std::size_t arity() const noexcept { return roles.size(); }

  static PredicateSig unary(std::string name);
  static PredicateSig binary(std::string name, std::string subject = "subject",
                             std::string object = "object");
  static PredicateSig nary(std::string name, std::vector<std::string> roles);

  friend bool operator==(const PredicateSig&, const PredicateSig&) = default;
};

// An ordered set of predicate signatures, looked up by name.
class Signature {
 public:
  Signature() = default;
  // Throws Error(kDuplicatePredicate) or Error(kInvalidIdentifier) for an
  // empty role list or repeated role names.
  explicit Signature(std::vector<PredicateSig> predicates);

  const PredicateSig* find(std::string_view name) const noexcept;
  // Throws Error(kUnknownPredicate).
  const PredicateSig& at(std::string_view name) const;

  const std::vector<PredicateSig>& predicates() const noexcept {
    return predicates_;
  }
  std::size_t size() const noexcept { return predicates_.size(); }

 private:
  std::vector<PredicateSig> predicates_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

struct Assertion {
  std::string predicate;
  std::vector<EntityId> args;
  // Names the reified relation node; set iff arity >= 3 in canonical_form().
  std::optional<EntityId> instance_id;

  friend auto operator<=>(const Assertion&, const Assertion&) = default;
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

std::ostream& operator<<(std::ostream& os, const Assertion& a);

using Tuple = std::vector<EntityId>;

// Finite closed-world assertion store. The entity set is exactly the set of
// names mentioned by some assertion. Relation-instance ids of reified facts
// live in their own namespace and are never entities.
//
// A const KnowledgeBase is immutable and may be shared across threads; the
// mutating members exist for builders (parser, scaffolds, model search).
class KnowledgeBase {
 public:
  explicit KnowledgeBase(std::shared_ptr<const Signature> signature);

  const Signature& signature() const noexcept { return *signature_; }
  const std::shared_ptr<const Signature>& signature_ptr() const noexcept {
    return signature_;
  }

  // Returns true if the assertion was new. An explicit instance id is only
  // accepted for arity >= 3 and is kept from the first insertion.
  // Throws kUnknownPredicate, kArityMismatch, kInstanceIdConflict.
  bool add(std::string_view predicate, Tuple args,
           std::optional<EntityId> instance_id = std::nullopt);
  bool remove(std::string_view predicate, const Tuple& args);

  // Throws kUnknownPredicate, kArityMismatch.
  bool holds(std::string_view predicate, std::span<const EntityId> args) const;
  // Lookup without signature validation; unknown predicates hold nowhere.
  bool contains(std::string_view predicate,
                std::span<const EntityId> args) const noexcept;

  std::vector<EntityId> entities() const;
  bool has_entity(const EntityId& id) const noexcept {
    return entity_refs_.contains(id);
  }
  std::size_t entity_count() const noexcept { return entity_refs_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Sorted tuples of one predicate (empty if none asserted).
  std::vector<Tuple> tuples(std::string_view predicate) const;
  // Names of predicates with at least one assertion, sorted.
  std::vector<std::string> used_predicates() const;

  // Assertions sorted by (predicate, args). Reified facts without an explicit
  // id receive "<predicate>_<NNNN>", numbered per predicate in this order and
  // skipping names already taken, so the result depends only on the content.
  std::vector<Assertion> canonical_form() const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  struct TupleLess {
    using is_transparent = void;
    bool operator()(std::span<const EntityId> a,
                    std::span<const EntityId> b) const noexcept;
  };
  using Table = std::map<Tuple, std::optional<EntityId>, TupleLess>;

  const Table* table(std::string_view predicate) const noexcept;

  std::shared_ptr<const Signature> signature_;
  std::map<std::string, Table, std::less<>> facts_;
  std::map<EntityId, std::size_t> entity_refs_;
  std::set<EntityId> instance_ids_;
  std::size_t size_ = 0;
};

// Value-returning forms of the store operations.
KnowledgeBase new_kb(Signature signature);
KnowledgeBase assert_fact(const KnowledgeBase& kb, std::string_view predicate,
                          const std::vector<std::string>& args);
bool holds(const KnowledgeBase& kb, std::string_view predicate,
           const std::vector<std::string>& args);
std::vector<Assertion> canonical_form(const KnowledgeBase& kb);

// Convenience for literals in tests and scaffolds.
Tuple tuple_of(std::initializer_list<std::string_view> names);

}  // namespace gfoart
