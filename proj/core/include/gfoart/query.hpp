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

// A conjunction of positive atoms such as
//   "Artifact(?x), is-instance-of(?x, ?K)"
// Arguments starting with '?' are variables, anything else names an entity.
// Atoms may be separated by ',' or '∧'. Throws kParse, kUnknownPredicate and
// kArityMismatch (checked against `signature`).
std::vector<Formula> parse_pattern(std::string_view text,
                                   const Signature& signature);

// Parses a single ground atom, e.g. "Artifact(x1)". Throws as parse_pattern,
// plus kParse for variables.
Assertion parse_ground_atom(std::string_view text, const Signature& signature);

// Bindings of the pattern variables, sorted. A ground pattern yields one empty
// binding when it holds and none otherwise.
std::vector<Binding> query(const KnowledgeBase& kb, std::string_view pattern);

}  // namespace gfoart
