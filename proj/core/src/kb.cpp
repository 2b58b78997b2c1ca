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

#include "gfoart/kb.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include "gfoart/error.hpp"

namespace gfoart {

bool is_valid_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  auto word = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  };
  if (!word(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return word(c) || c == '-'; });
}

EntityId::EntityId(std::string name) : name_(std::move(name)) {
  if (!is_valid_identifier(name_)) {
    throw Error(ErrorCode::kInvalidIdentifier, "'" + name_ + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const EntityId& id) {
  return os << id.str();
}

PredicateSig PredicateSig::unary(std::string name) {
  return {std::move(name), {"subject"}};
}

PredicateSig PredicateSig::binary(std::string name, std::string subject,
                                  std::string object) {
  return {std::move(name), {std::move(subject), std::move(object)}};
}

PredicateSig PredicateSig::nary(std::string name,
                                std::vector<std::string> roles) {
  return {std::move(name), std::move(roles)};
}

Signature::Signature(std::vector<PredicateSig> predicates)
    : predicates_(std::move(predicates)) {
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    const auto& p = predicates_[i];
    if (p.roles.empty()) {
      throw Error(ErrorCode::kInvalidIdentifier,
                  "predicate '" + p.name + "' has no roles");
    }
    std::set<std::string_view> seen;
    for (const auto& r : p.roles) {
      if (!seen.insert(r).second) {
        throw Error(ErrorCode::kInvalidIdentifier,
                    "role '" + r + "' repeated in '" + p.name + "'");
      }
    }
    if (!by_name_.emplace(p.name, i).second) {
      throw Error(ErrorCode::kDuplicatePredicate, p.name);
    }
  }
}

const PredicateSig* Signature::find(std::string_view name) const noexcept {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &predicates_[it->second];
}

const PredicateSig& Signature::at(std::string_view name) const {
  if (const auto* p = find(name)) return *p;
  throw Error(ErrorCode::kUnknownPredicate, std::string(name));
}

std::ostream& operator<<(std::ostream& os, const Assertion& a) {
  os << a.predicate << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ", ";
    os << a.args[i];
  }
  os << ')';
  if (a.instance_id) os << " @" << *a.instance_id;
  return os;
}

namespace {

void check_arity(const PredicateSig& sig, std::size_t got) {
  if (sig.arity() != got) {
    throw Error(ErrorCode::kArityMismatch,
                sig.name + " expects " + std::to_string(sig.arity()) +
                    " arguments, got " + std::to_string(got));
  }
}

std::string minted_id(std::string_view predicate, std::size_t ordinal) {
  char digits[16];
  std::snprintf(digits, sizeof digits, "%04zu", ordinal);
  return std::string(predicate) + "_" + digits;
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::shared_ptr<const Signature> signature)
    : signature_(std::move(signature)) {
  if (!signature_) signature_ = std::make_shared<const Signature>();
}

bool KnowledgeBase::add(std::string_view predicate, Tuple args,
                        std::optional<EntityId> instance_id) {
  const auto& sig = signature_->at(predicate);
  check_arity(sig, args.size());
  if (instance_id && sig.arity() < 3) {
    throw Error(ErrorCode::kInstanceIdConflict,
                "instance id given for " + std::to_string(sig.arity()) +
                    "-ary predicate " + sig.name);
  }
  for (const auto& a : args) {
    if (instance_ids_.contains(a)) {
      throw Error(ErrorCode::kInstanceIdConflict,
                  "'" + a.str() + "' already names a relation instance");
    }
  }
  auto& tab = facts_[sig.name];
  if (tab.contains(args)) return false;
  if (instance_id) {
    if (instance_ids_.contains(*instance_id) ||
        entity_refs_.contains(*instance_id) ||
        std::find(args.begin(), args.end(), *instance_id) != args.end()) {
      throw Error(ErrorCode::kInstanceIdConflict,
                  "'" + instance_id->str() + "' is already in use");
    }
    instance_ids_.insert(*instance_id);
  }
  for (const auto& a : args) ++entity_refs_[a];
  tab.emplace(std::move(args), std::move(instance_id));
  ++size_;
  return true;
}

bool KnowledgeBase::remove(std::string_view predicate, const Tuple& args) {
  auto t = facts_.find(predicate);
  if (t == facts_.end()) return false;
  auto it = t->second.find(args);
  if (it == t->second.end()) return false;
  if (it->second) instance_ids_.erase(*it->second);
  for (const auto& a : args) {
    auto r = entity_refs_.find(a);
    if (--r->second == 0) entity_refs_.erase(r);
  }
  t->second.erase(it);
  if (t->second.empty()) facts_.erase(t);
  --size_;
  return true;
}

bool KnowledgeBase::TupleLess::operator()(
    std::span<const EntityId> a, std::span<const EntityId> b) const noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

const KnowledgeBase::Table* KnowledgeBase::table(
    std::string_view predicate) const noexcept {
  auto t = facts_.find(predicate);
  return t == facts_.end() ? nullptr : &t->second;
}

bool KnowledgeBase::holds(std::string_view predicate,
                          std::span<const EntityId> args) const {
  check_arity(signature_->at(predicate), args.size());
  return contains(predicate, args);
}

bool KnowledgeBase::contains(std::string_view predicate,
                             std::span<const EntityId> args) const noexcept {
  const Table* tab = table(predicate);
  if (!tab) return false;
  return tab->find(args) != tab->end();
}

std::vector<EntityId> KnowledgeBase::entities() const {
  std::vector<EntityId> out;
  out.reserve(entity_refs_.size());
  for (const auto& [id, _] : entity_refs_) out.push_back(id);
  return out;
}

std::vector<Tuple> KnowledgeBase::tuples(std::string_view predicate) const {
  std::vector<Tuple> out;
  if (const Table* tab = table(predicate)) {
    out.reserve(tab->size());
    for (const auto& [args, _] : *tab) out.push_back(args);
  }
  return out;
}

std::vector<std::string> KnowledgeBase::used_predicates() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : facts_) out.push_back(name);
  return out;
}

std::vector<Assertion> KnowledgeBase::canonical_form() const {
  std::vector<Assertion> out;
  out.reserve(size_);
  for (const auto& [pred, tab] : facts_) {
    const bool reified = signature_->at(pred).arity() >= 3;
    std::size_t ordinal = 1;
    for (const auto& [args, id] : tab) {
      Assertion a{pred, args, std::nullopt};
      if (reified) {
        if (id) {
          a.instance_id = id;
        } else {
          for (;; ++ordinal) {
            EntityId candidate(minted_id(pred, ordinal));
            if (!instance_ids_.contains(candidate) &&
                !entity_refs_.contains(candidate)) {
              a.instance_id = std::move(candidate);
              ++ordinal;
              break;
            }
          }
        }
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  return a.size_ == b.size_ && a.canonical_form() == b.canonical_form();
}

KnowledgeBase new_kb(Signature signature) {
  return KnowledgeBase(std::make_shared<const Signature>(std::move(signature)));
}

KnowledgeBase assert_fact(const KnowledgeBase& kb, std::string_view predicate,
                          const std::vector<std::string>& args) {
  KnowledgeBase out = kb;
  Tuple tuple;
  tuple.reserve(args.size());
  for (const auto& a : args) tuple.emplace_back(a);
  out.add(predicate, std::move(tuple));
  return out;
}

bool holds(const KnowledgeBase& kb, std::string_view predicate,
           const std::vector<std::string>& args) {
  Tuple tuple;
  tuple.reserve(args.size());
  for (const auto& a : args) tuple.emplace_back(a);
  return kb.holds(predicate, tuple);
}

std::vector<Assertion> canonical_form(const KnowledgeBase& kb) {
  return kb.canonical_form();
}

Tuple tuple_of(std::initializer_list<std::string_view> names) {
  Tuple out;
  out.reserve(names.size());
  for (auto n : names) out.emplace_back(std::string(n));
  return out;
}

}  // namespace gfoart
