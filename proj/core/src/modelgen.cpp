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

#include "gfoart/modelgen.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>

#include "gfoart/error.hpp"
#include "gfoart/folk.hpp"
#include "gfoart/turtle.hpp"

namespace gfoart {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSatisfiable:
      return "satisfiable";
    case Verdict::kUnsatisfiableUpToBound:
      return "unsatisfiable-up-to-bound";
  }
  return "?";
}

namespace {

struct GroundAtom {
  std::string predicate;
  Tuple args;

  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

EntityId resolve(const Term& t, const Binding& b) {
  if (!t.is_variable()) return EntityId(t.name);
  auto it = b.find(t.name);
  if (it == b.end()) throw Error(ErrorCode::kUnboundVariable, t.name);
  return it->second;
}

Binding rebind(const Binding& b, const std::string& v, const EntityId& e) {
  Binding out = b;
  out.insert_or_assign(v, e);
  return out;
}

void validate(const std::vector<NamedAxiom>& axioms,
              const std::vector<Assertion>& must_contain,
              std::size_t max_entities) {
  if (max_entities > kMaxModelBound) {
    throw Error(ErrorCode::kBoundTooLarge,
                std::to_string(max_entities) + " exceeds the limit of " +
                    std::to_string(kMaxModelBound) + " entities");
  }
  const Signature& sig = *gfo_signature();
  for (const auto& a : axioms) {
    auto diags = well_formed(a.formula, sig);
    if (diags.empty()) continue;
    static constexpr ErrorCode kCodes[] = {ErrorCode::kUnboundVariable,
                                           ErrorCode::kUnknownPredicate,
                                           ErrorCode::kArityMismatch};
    throw Error(kCodes[static_cast<int>(diags.front().kind)],
                a.id + ": " + diags.front().message);
  }
  for (const auto& m : must_contain) {
    const PredicateSig& p = sig.at(m.predicate);
    if (p.arity() != m.args.size()) {
      throw Error(ErrorCode::kArityMismatch, m.predicate);
    }
  }
}

KnowledgeBase seed(const std::vector<Assertion>& must_contain) {
  KnowledgeBase kb = new_gfo_kb();
  for (const auto& m : must_contain) kb.add(m.predicate, m.args);
  return kb;
}

bool is_model(const KnowledgeBase& kb, const std::vector<NamedAxiom>& axioms) {
  return std::all_of(axioms.begin(), axioms.end(), [&](const NamedAxiom& a) {
    return eval_naive(kb, a.formula);
  });
}

std::string fresh_name(std::size_t i) { return "e" + std::to_string(i); }

class Chase {
 public:
  Chase(const std::vector<NamedAxiom>& axioms, std::size_t bound,
        std::size_t& nodes)
      : axioms_(axioms), bound_(bound), nodes_(nodes) {
    for (const auto& a : axioms_) clauses_.push_back(constraint_clauses(a.formula));
  }

  std::optional<KnowledgeBase> search(const KnowledgeBase& kb) {
    if (!visited_.insert(kb.canonical_form()).second) return std::nullopt;
    ++nodes_;
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      auto ws = find_violations(kb, axioms_[i].id, axioms_[i].formula);
      if (ws.empty()) continue;
      std::set<GroundAtom> repairs;
      std::vector<EntityId> pending;
      Binding b = ws.front().binding;
      repair(kb, clauses_[i][ws.front().clause].body, b, pending, repairs);
      for (const auto& r : repairs) {
        if (kb.contains(r.predicate, r.args)) continue;
        KnowledgeBase next = kb;
        next.add(r.predicate, r.args);
        if (next.entity_count() > bound_) continue;
        if (auto found = search(next)) return found;
      }
      return std::nullopt;
    }
    return kb;
  }

 private:
  // Collects the single assertions that each move `f` under `b` towards
  // truth. Failures that no addition can repair (a negation or equality that
  // already fails, a uniqueness clash) contribute nothing.
  void repair(const KnowledgeBase& kb, const Formula& f, const Binding& b,
              std::vector<EntityId>& pending, std::set<GroundAtom>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kAtom: {
        GroundAtom g{f.predicate(), {}};
        for (const auto& t : f.terms()) g.args.push_back(resolve(t, b));
        out.insert(std::move(g));
        return;
      }
      case K::kEq:
      case K::kNot:
        return;
      case K::kAnd:
        for (const auto& c : f.children()) {
          if (!eval_naive(kb, c, b)) {
            repair(kb, c, b, pending, out);
            return;
          }
        }
        return;
      case K::kOr:
        for (const auto& c : f.children()) repair(kb, c, b, pending, out);
        return;
      case K::kImplies:
        if (eval_naive(kb, f.child(0), b)) {
          repair(kb, f.child(1), b, pending, out);
        }
        return;
      case K::kForall:
        for (const auto& e : kb.entities()) {
          Binding inner = rebind(b, f.variable(), e);
          if (!eval_naive(kb, f.child(0), inner)) {
            repair(kb, f.child(0), inner, pending, out);
            return;
          }
        }
        return;
      case K::kExistsUnique: {
        const auto domain = kb.entities();
        const bool any = std::any_of(domain.begin(), domain.end(), [&](auto& e) {
          return eval_naive(kb, f.child(0), rebind(b, f.variable(), e));
        });
        if (any) return;
        [[fallthrough]];
      }
      case K::kExists: {
        std::vector<EntityId> candidates = kb.entities();
        candidates.insert(candidates.end(), pending.begin(), pending.end());
        for (const auto& c : candidates) {
          repair(kb, f.child(0), rebind(b, f.variable(), c), pending, out);
        }
        if (kb.entity_count() + pending.size() < bound_) {
          std::size_t i = 1;
          auto taken = [&](const EntityId& e) {
            return kb.has_entity(e) ||
                   std::find(pending.begin(), pending.end(), e) != pending.end();
          };
          while (taken(EntityId(fresh_name(i)))) ++i;
          pending.emplace_back(fresh_name(i));
          repair(kb, f.child(0), rebind(b, f.variable(), pending.back()), pending,
                 out);
          pending.pop_back();
        }
        return;
      }
    }
  }

  const std::vector<NamedAxiom>& axioms_;
  std::vector<std::vector<ConstraintClause>> clauses_;
  std::size_t bound_;
  std::size_t& nodes_;
  std::set<std::vector<Assertion>> visited_;
};

std::set<std::string> relevant_predicates(
    const std::vector<NamedAxiom>& axioms,
    const std::vector<Assertion>& must_contain) {
  std::set<std::string> out;
  std::vector<Formula> stack;
  for (const auto& a : axioms) stack.push_back(a.formula);
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (f.kind() == Formula::Kind::kAtom) out.insert(f.predicate());
    for (const auto& c : f.children()) stack.push_back(c);
  }
  for (const auto& m : must_contain) out.insert(m.predicate);
  return out;
}

void all_tuples(std::size_t arity, const std::vector<EntityId>& pool,
                Tuple& prefix, std::vector<Tuple>& out) {
  if (prefix.size() == arity) {
    out.push_back(prefix);
    return;
  }
  for (const auto& e : pool) {
    prefix.push_back(e);
    all_tuples(arity, pool, prefix, out);
    prefix.pop_back();
  }
}

// Models with exactly `count` entities drawn from `pool`.
std::optional<KnowledgeBase> brute_level(
    const std::vector<NamedAxiom>& axioms,
    const std::vector<Assertion>& must_contain,
    const std::set<std::string>& predicates, const std::vector<EntityId>& pool,
    std::size_t count, const SearchOptions& options, std::size_t& enumerated) {
  const KnowledgeBase base = seed(must_contain);
  std::vector<GroundAtom> free;
  for (const auto& p : predicates) {
    std::vector<Tuple> tuples;
    Tuple prefix;
    all_tuples(gfo_signature()->at(p).arity(), pool, prefix, tuples);
    for (auto& t : tuples) {
      if (!base.contains(p, t)) free.push_back({p, std::move(t)});
    }
  }
  if (free.size() > options.max_ground_atoms) {
    throw Error(ErrorCode::kBoundTooLarge,
                std::to_string(free.size()) +
                    " ground atoms exceed the brute-force limit of " +
                    std::to_string(options.max_ground_atoms));
  }
  // Entities each free atom mentions, as bits over `pool`.
  std::vector<std::uint32_t> mentions(free.size(), 0);
  std::uint32_t base_mask = 0;
  for (std::size_t e = 0; e < pool.size(); ++e) {
    if (base.has_entity(pool[e])) base_mask |= std::uint32_t{1} << e;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const auto& args = free[i].args;
      if (std::find(args.begin(), args.end(), pool[e]) != args.end()) {
        mentions[i] |= std::uint32_t{1} << e;
      }
    }
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size());
       ++mask) {
    std::uint32_t present = base_mask;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) present |= mentions[i];
    }
    if (static_cast<std::size_t>(std::popcount(present)) != count) continue;
    KnowledgeBase kb = base;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) kb.add(free[i].predicate, free[i].args);
    }
    ++enumerated;
    if (is_model(kb, axioms)) return kb;
  }
  return std::nullopt;
}

}  // namespace

ModelSearchResult find_model(const std::vector<NamedAxiom>& axioms,
                             std::size_t max_entities,
                             const std::vector<Assertion>& must_contain,
                             SearchOptions options) {
  validate(axioms, must_contain, max_entities);
  ModelSearchResult result;
  result.bound = max_entities;
  const KnowledgeBase start = seed(must_contain);
  const std::vector<EntityId> fixed = start.entities();

  std::vector<EntityId> fresh;
  for (std::size_t i = 1; fresh.size() + fixed.size() < max_entities; ++i) {
    EntityId e(fresh_name(i));
    if (!start.has_entity(e)) fresh.push_back(std::move(e));
  }
  const auto predicates = relevant_predicates(axioms, must_contain);

  for (std::size_t k = fixed.size(); k <= max_entities; ++k) {
    std::optional<KnowledgeBase> found;
    if (options.strategy == SearchStrategy::kChase) {
      found = Chase(axioms, k, result.models_enumerated).search(start);
    } else {
      std::vector<EntityId> pool = fixed;
      const std::size_t extra =
          options.symmetry_breaking ? k - fixed.size() : fresh.size();
      pool.insert(pool.end(), fresh.begin(), fresh.begin() + extra);
      found = brute_level(axioms, must_contain, predicates, pool, k, options,
                          result.models_enumerated);
    }
    if (found) {
      if (!is_model(*found, axioms)) {
        throw std::logic_error("model search returned a non-model");
      }
      result.verdict = Verdict::kSatisfiable;
      result.witness = std::move(found);
      return result;
    }
  }
  return result;
}

std::optional<std::size_t> minimal_model_size(
    const std::vector<NamedAxiom>& axioms,
    const std::vector<Assertion>& must_contain, std::size_t bound,
    SearchOptions options) {
  auto r = find_model(axioms, bound, must_contain, options);
  if (!r.witness) return std::nullopt;
  return r.witness->entity_count();
}

std::string to_string(const ModelSearchResult& result) {
  std::ostringstream os;
  os << "verdict: " << to_string(result.verdict) << '\n'
     << "bound: " << result.bound << '\n'
     << "models_enumerated: " << result.models_enumerated << '\n';
  if (result.witness) {
    os << "entities: " << result.witness->entity_count() << '\n'
       << '\n'
       << turtle::serialize(*result.witness);
  }
  return os.str();
}

KnowledgeBase scaffold_artifact(std::string_view kind_name,
                                ScaffoldOptions options) {
  if (!is_valid_identifier(kind_name)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "kind name '" + std::string(kind_name) + "'");
  }
  std::string stem(kind_name);
  std::transform(stem.begin(), stem.end(), stem.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  std::vector<std::string> features;
  if (stem == "bike") {
    features = {"wheels", "handlebars", "saddle"};
  } else if (stem == "chair") {
    features = {"legs", "seat", "backrest"};
  } else {
    features = {stem + "_feature"};
  }

  const std::string kind(kind_name);
  const std::string artifact = stem + "1";
  const std::string design = stem + "_design";
  const std::string model = stem + "_model";
  const std::string maker = "maker1";
  const std::string concept_id = stem + "_concept";
  const std::string feature_set = stem + "_features";
  const std::string standard = stem + "_standard";
  const std::string audience = "audience1";

  KnowledgeBase kb = new_gfo_kb();
  auto add = [&kb](std::string_view pred,
                   std::initializer_list<std::string_view> args) {
    kb.add(pred, tuple_of(args));
  };
  add("Artifact", {artifact});
  add("ArtifKind", {kind});
  add("Category", {kind});
  add("is-instance-of", {artifact, kind});
  add("ArtifDesign", {design});
  add("hasDesign", {artifact, design});
  add("ArtifModel", {model});
  add("hasModel", {artifact, model});
  add("Maker", {maker, artifact});
  add("intendToBuild", {maker, artifact, kind});
  add("ConceptOf", {concept_id, kind, feature_set});
  add("hasConcept", {maker, concept_id, kind, feature_set});
  for (const auto& f : features) {
    add("Is-Criterial-Feature", {f, kind});
    add("hasMember", {feature_set, f});
  }
  add("Criterial-Features", {feature_set, kind});
  add("isDefinedby", {kind, feature_set});
  add("Audienceof", {audience});
  add("StandardDef", {standard, kind, feature_set, audience});
  add("specifiesStandDef", {audience, kind, feature_set, standard});

  if (options.with_requirements) {
    const std::string part = stem + "_part";
    const std::string r_kind = stem + "_kind_req";
    const std::string r_artifact = stem + "_artifact_req";
    const std::string r_design = stem + "_design_req";
    const std::string r_model = stem + "_model_req";
    const std::string r_part = stem + "_part_req";
    const std::string r_feature = stem + "_feature_req";
    add("Krequirement", {r_kind, kind, audience});
    add("specifiesKRequirement", {audience, r_kind, kind});
    add("requirement", {r_artifact, artifact, audience});
    add("specifiesRequirement", {audience, r_artifact, artifact});
    add("DesignRequirement", {r_design, design, audience});
    add("specifiesDRequirement", {audience, r_design, design});
    add("ModelRequirement", {r_model, model, audience});
    add("specifiesMRequirement", {audience, r_model, model});
    add("PartRequirement", {r_part, part, artifact, audience});
    add("specifiesPartRequirement", {audience, r_part, part, artifact});
    add("FeatRequirement", {r_feature, features.front(), artifact, audience});
    add("specifiesFeatRequirement",
        {audience, r_feature, features.front(), artifact});
  }

  if (options.with_space) {
    const std::string stuff = stem + "_stuff";
    const std::string region = stem + "_region";
    const std::string boundary = stem + "_surface";
    const std::string region_boundary = stem + "_region_boundary";
    const std::string environment = stem + "_environment";
    add("MOB", {artifact});
    add("MatE", {artifact});
    add("Stuff", {stuff});
    add("consists_of", {artifact, stuff});
    add("has_mass", {artifact, stem + "_mass"});
    add("has_density", {artifact, stem + "_density"});
    add("SReg", {region});
    add("Conn", {region});
    add("occ", {artifact, region});
    add("mbd", {boundary, artifact});
    add("sb", {region_boundary, region});
    add("occ", {boundary, region_boundary});
    add("environ", {environment, artifact});
    add("ObSit", {environment});
    add("contained_in", {artifact, environment});
  }
  return kb;
}

std::vector<Mutation> mutations(const KnowledgeBase& kb) {
  std::vector<Mutation> out;
  for (auto& a : kb.canonical_form()) {
    KnowledgeBase m = kb;
    m.remove(a.predicate, a.args);
    out.push_back({std::move(a), std::move(m)});
  }
  return out;
}

}  // namespace gfoart
