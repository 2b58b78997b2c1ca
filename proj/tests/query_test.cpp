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

#include <gtest/gtest.h>

#include "gfoart/error.hpp"
#include "gfoart/modelgen.hpp"
#include "gfoart/query.hpp"
#include "gfoart/vocab.hpp"

namespace gfoart {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gfoart::Error thrown";
  return ErrorCode::kBoundTooLarge;
}

TEST(Pattern, ParsesVariablesAndConstants) {
  auto atoms = parse_pattern("Artifact(?x), is-instance-of(?x, Bike)",
                             *gfo_signature());
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_EQ(atoms[1].predicate(), "is-instance-of");
  EXPECT_TRUE(atoms[1].terms()[0].is_variable());
  EXPECT_FALSE(atoms[1].terms()[1].is_variable());
  EXPECT_EQ(parse_pattern("MOB(?x) ∧ occ(?x, ?r)", *gfo_signature()).size(),
            2u);
}

TEST(Pattern, Errors) {
  const auto& sig = *gfo_signature();
  EXPECT_EQ(code_of([&] { parse_pattern("", sig); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_pattern("MOB(?x", sig); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_pattern("MOB(?x) occ(?x,?y)", sig); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_pattern("Nope(?x)", sig); }),
            ErrorCode::kUnknownPredicate);
  EXPECT_EQ(code_of([&] { parse_pattern("occ(?x)", sig); }),
            ErrorCode::kArityMismatch);
  EXPECT_EQ(code_of([&] { parse_ground_atom("MOB(?x)", sig); }),
            ErrorCode::kParse);
}

TEST(GroundAtom, Parses) {
  Assertion a = parse_ground_atom(" consists_of( a , b ) ", *gfo_signature());
  EXPECT_EQ(a.predicate, "consists_of");
  EXPECT_EQ(a.args, tuple_of({"a", "b"}));
}

TEST(Query, Bindings) {
  KnowledgeBase kb = scaffold_artifact("Bike");
  auto rows = query(kb, "Maker(?s, ?x), intendToBuild(?s, ?x, ?K)");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(to_string(rows[0]), "K=Bike, s=maker1, x=bike1");
  EXPECT_EQ(query(kb, "Artifact(bike1)").size(), 1u);
  EXPECT_TRUE(query(kb, "Artifact(bike1)")[0].empty());
  EXPECT_TRUE(query(kb, "Artifact(Bike)").empty());
  EXPECT_EQ(query(kb, "Is-Criterial-Feature(?p, ?K)").size(), 3u);
}

TEST(Query, RepeatedVariables) {
  KnowledgeBase kb = new_gfo_kb();
  kb.add("consists_of", tuple_of({"h", "h"}));
  kb.add("consists_of", tuple_of({"a", "b"}));
  auto rows = query(kb, "consists_of(?x, ?x)");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("x"), EntityId("h"));
}

}  // namespace
}  // namespace gfoart
