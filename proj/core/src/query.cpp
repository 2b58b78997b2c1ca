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

#include "gfoart/query.hpp"

#include <cctype>

#include "gfoart/error.hpp"
#include "gfoart/folk.hpp"

namespace gfoart {

namespace {

class PatternParser {
 public:
  PatternParser(std::string_view text, const Signature& sig)
      : text_(text), sig_(sig) {}

  std::vector<Formula> atoms() {
    std::vector<Formula> out;
    skip_space();
    if (done()) fail("empty pattern");
    out.push_back(atom());
    for (;;) {
      skip_space();
      if (done()) break;
      if (!separator()) fail("expected ',' between atoms");
      out.push_back(atom());
    }
    return out;
  }

 private:
  bool done() const { return i_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kParse, message + " at offset " +
                                       std::to_string(i_) + " in '" +
                                       std::string(text_) + "'");
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
      ++i_;
    }
  }

  bool separator() {
    if (text_[i_] == ',') {
      ++i_;
      return true;
    }
    static constexpr std::string_view kAnd = "∧";
    if (text_.substr(i_, kAnd.size()) == kAnd) {
      i_ += kAnd.size();
      return true;
    }
    return false;
  }

  std::string word() {
    skip_space();
    std::size_t start = i_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                       text_[i_] == '_' || text_[i_] == '-')) {
      ++i_;
    }
    return std::string(text_.substr(start, i_ - start));
  }

  void expect(char c) {
    skip_space();
    if (done() || text_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  Formula atom() {
    const std::string name = word();
    if (name.empty()) fail("expected a predicate name");
    const PredicateSig& p = sig_.at(name);
    expect('(');
    std::vector<Term> terms;
    for (;;) {
      skip_space();
      const bool is_var = !done() && text_[i_] == '?';
      if (is_var) ++i_;
      std::string arg = word();
      if (!is_valid_identifier(arg)) fail("expected an argument");
      terms.push_back(is_var ? var(std::move(arg)) : constant(std::move(arg)));
      skip_space();
      if (!done() && text_[i_] == ',') {
        ++i_;
        continue;
      }
      expect(')');
      break;
    }
    if (terms.size() != p.arity()) {
      throw Error(ErrorCode::kArityMismatch,
                  name + " takes " + std::to_string(p.arity()) +
                      " arguments, got " + std::to_string(terms.size()));
    }
    return gfoart::atom(name, std::move(terms));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<Formula> parse_pattern(std::string_view text,
                                   const Signature& signature) {
  return PatternParser(text, signature).atoms();
}

Assertion parse_ground_atom(std::string_view text, const Signature& signature) {
  auto atoms = parse_pattern(text, signature);
  if (atoms.size() != 1) {
    throw Error(ErrorCode::kParse,
                "expected a single atom in '" + std::string(text) + "'");
  }
  Assertion out{atoms[0].predicate(), {}, std::nullopt};
  for (const auto& t : atoms[0].terms()) {
    if (t.is_variable()) {
      throw Error(ErrorCode::kParse,
                  "variable ?" + t.name + " in ground atom '" +
                      std::string(text) + "'");
    }
    out.args.emplace_back(t.name);
  }
  return out;
}

std::vector<Binding> query(const KnowledgeBase& kb, std::string_view pattern) {
  return match_conjunction(kb, parse_pattern(pattern, kb.signature()));
}

}  // namespace gfoart
