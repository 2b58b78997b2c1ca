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

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gfoart/formula.hpp"
#include "gfoart/kb.hpp"
#include "gfoart/vocab.hpp"

namespace gfoart::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string fixture(const std::string& name) {
  return std::string(GFOART_FIXTURE_DIR) + "/" + name;
}

inline std::string corpus(const std::string& name) {
  return std::string(GFOART_CORPUS_DIR) + "/" + name;
}

// Predicate names mentioned by any catalog axiom (strict mode included).
inline std::vector<std::string> catalog_predicates() {
  std::set<std::string> names;
  std::vector<Formula> stack;
  for (const auto& a : axiom_catalog(all_profiles(), {.strict = true})) {
    stack.push_back(a.formula);
  }
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (f.kind() == Formula::Kind::kAtom) names.insert(f.predicate());
    for (const auto& c : f.children()) stack.push_back(c);
  }
  return {names.begin(), names.end()};
}

struct RandomKbOptions {
  std::size_t max_entities = 8;
  std::size_t max_assertions = 40;
  // Share of assertions drawn from catalog predicates rather than the whole
  // signature.
  double catalog_bias = 0.85;
  // Give some reified facts explicit instance ids.
  bool explicit_ids = false;
};

// Small KBs over the GFO signature, with entity names drawn from a pool
// of mixed-case names.
inline KnowledgeBase random_gfo_kb(std::mt19937& rng,
                                   const RandomKbOptions& options = {}) {
  static const std::vector<std::string> kPool = {"a", "b", "K", "c", "x1",
                                                 "Q", "d-1", "e_2", "m", "s"};
  static const std::vector<std::string> kCatalog = catalog_predicates();
  const auto& sig = *gfo_signature();
  std::uniform_int_distribution<std::size_t> n_entities(
      1, std::min(options.max_entities, kPool.size()));
  std::uniform_int_distribution<std::size_t> n_assertions(
      0, options.max_assertions);
  std::bernoulli_distribution from_catalog(options.catalog_bias);
  std::bernoulli_distribution with_id(0.3);

  const std::size_t k = n_entities(rng);
  std::vector<std::string> entities(kPool.begin(), kPool.begin() + k);
  std::uniform_int_distribution<std::size_t> pick_entity(0, k - 1);
  std::uniform_int_distribution<std::size_t> pick_catalog(0,
                                                          kCatalog.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_any(0, sig.size() - 1);

  KnowledgeBase kb = new_gfo_kb();
  const std::size_t n = n_assertions(rng);
  std::size_t next_id = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const PredicateSig& p = from_catalog(rng)
                                ? sig.at(kCatalog[pick_catalog(rng)])
                                : sig.predicates()[pick_any(rng)];
    Tuple args;
    for (std::size_t j = 0; j < p.arity(); ++j) {
      args.emplace_back(entities[pick_entity(rng)]);
    }
    std::optional<EntityId> id;
    if (options.explicit_ids && p.arity() >= 3 && with_id(rng)) {
      id = EntityId("r" + std::to_string(next_id++));
    }
    kb.add(p.name, std::move(args), std::move(id));
  }
  return kb;
}

// All assignments of `vars` over `domain`, in lexicographic order.
template <typename Fn>
void for_each_binding(const std::vector<std::string>& vars,
                      const std::vector<EntityId>& domain, Fn&& fn) {
  Binding b;
  std::vector<std::size_t> idx(vars.size(), 0);
  if (!vars.empty() && domain.empty()) return;
  for (;;) {
    b.clear();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      b.insert_or_assign(vars[i], domain[idx[i]]);
    }
    fn(b);
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (vars.empty()) return;
  }
}

}  // namespace gfoart::testing
