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

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gfoart/kb.hpp"

namespace gfoart::turtle {

inline constexpr std::string_view kGfoNamespace =
    "https://example.org/gfo-artifact#";
inline constexpr std::string_view kKbNamespace = "https://example.org/kb#";

struct ParseDiagnostic {
  enum class Kind { kSyntax, kUnknownPredicate, kArity, kMissingRole, kDuplicateRole };

  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in code points
  Kind kind = Kind::kSyntax;
  std::string message;

  friend bool operator==(const ParseDiagnostic&,
                         const ParseDiagnostic&) = default;
};

std::string_view to_string(ParseDiagnostic::Kind kind);
// "line:col: kind: message"
std::string to_string(const ParseDiagnostic& d);

struct ParseResult {
  std::optional<KnowledgeBase> kb;  // present iff diagnostics is empty
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const noexcept { return kb.has_value(); }
};

// Parses the canonical Turtle subset against the GFO signature. Never throws
// on malformed input; every problem becomes a diagnostic, collected per
// statement.
ParseResult parse(std::string_view text);

// Canonical text: prefix block, blank line, then one statement per assertion
// in canonical_form() order. Reified facts list their role triples in
// signature role order.
std::string serialize(const KnowledgeBase& kb);

// Turtle local name of a predicate: unary and reified predicates become
// UpperCamelCase class names, binary ones lowerCamelCase properties, with '-'
// and '_' removed.
std::string local_name(const PredicateSig& predicate);
// Reverse lookup over the GFO signature; nullptr if unknown.
const PredicateSig* predicate_for_local_name(std::string_view local);

}  // namespace gfoart::turtle
