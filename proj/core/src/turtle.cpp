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

#include "gfoart/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "gfoart/error.hpp"
#include "gfoart/vocab.hpp"

namespace gfoart::turtle {

std::string_view to_string(ParseDiagnostic::Kind kind) {
  switch (kind) {
    case ParseDiagnostic::Kind::kSyntax:
      return "syntax";
    case ParseDiagnostic::Kind::kUnknownPredicate:
      return "unknown-predicate";
    case ParseDiagnostic::Kind::kArity:
      return "arity";
    case ParseDiagnostic::Kind::kMissingRole:
      return "missing-role";
    case ParseDiagnostic::Kind::kDuplicateRole:
      return "duplicate-role";
  }
  return "?";
}

std::string to_string(const ParseDiagnostic& d) {
  std::ostringstream os;
  os << d.line << ':' << d.column << ": " << to_string(d.kind) << ": "
     << d.message;
  return os.str();
}

std::string local_name(const PredicateSig& predicate) {
  std::string out;
  bool upper_next = false;
  for (char c : predicate.name) {
    if (c == '-' || c == '_') {
      upper_next = !out.empty();
      continue;
    }
    out += upper_next ? static_cast<char>(std::toupper(
                            static_cast<unsigned char>(c)))
                      : c;
    upper_next = false;
  }
  if (!out.empty()) {
    auto& first = reinterpret_cast<unsigned char&>(out[0]);
    first = predicate.arity() == 2 ? std::tolower(first) : std::toupper(first);
  }
  return out;
}

namespace {

const std::map<std::string, const PredicateSig*, std::less<>>& local_names() {
  static const auto table = [] {
    std::map<std::string, const PredicateSig*, std::less<>> t;
    for (const auto& p : gfo_signature()->predicates()) {
      t.emplace(local_name(p), &p);
    }
    return t;
  }();
  return table;
}

// Union of role names across reified predicates.
const std::set<std::string, std::less<>>& role_names() {
  static const auto roles = [] {
    std::set<std::string, std::less<>> r;
    for (const auto& p : gfo_signature()->predicates()) {
      if (p.arity() >= 3) r.insert(p.roles.begin(), p.roles.end());
    }
    return r;
  }();
  return roles;
}

}  // namespace

const PredicateSig* predicate_for_local_name(std::string_view local) {
  const auto& t = local_names();
  auto it = t.find(local);
  return it == t.end() ? nullptr : it->second;
}

namespace {

using Kind = ParseDiagnostic::Kind;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Token {
  enum class Type { kPrefixKw, kName, kIri, kA, kSemicolon, kDot, kBad, kEnd };
  Type type = Type::kEnd;
  std::string prefix;  // kName
  std::string text;    // local part, IRI body, or offending text
  Position pos;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (i_ >= text_.size()) return t;
    const char c = text_[i_];
    if (c == '.') {
      advance();
      t.type = Token::Type::kDot;
    } else if (c == ';') {
      advance();
      t.type = Token::Type::kSemicolon;
    } else if (c == '<') {
      advance();
      std::string body;
      while (i_ < text_.size() && text_[i_] != '>' && text_[i_] != '\n') {
        body += text_[i_];
        advance();
      }
      if (i_ < text_.size() && text_[i_] == '>') {
        advance();
        t.type = Token::Type::kIri;
        t.text = std::move(body);
      } else {
        t.type = Token::Type::kBad;
        t.text = "<" + body;
      }
    } else if (c == '@') {
      advance();
      std::string word = take_word();
      t.type = word == "prefix" ? Token::Type::kPrefixKw : Token::Type::kBad;
      t.text = "@" + word;
    } else if (c == ':' || std::isalpha(static_cast<unsigned char>(c))) {
      std::string head = take_word();
      if (i_ < text_.size() && text_[i_] == ':') {
        advance();
        t.type = Token::Type::kName;
        t.prefix = std::move(head);
        t.text = take_word();
      } else if (head == "a") {
        t.type = Token::Type::kA;
      } else {
        t.type = Token::Type::kBad;
        t.text = std::move(head);
      }
    } else {
      // One code point of junk.
      t.type = Token::Type::kBad;
      do {
        t.text += text_[i_];
        advance();
      } while (i_ < text_.size() &&
               (static_cast<unsigned char>(text_[i_]) & 0xC0) == 0x80);
    }
    return t;
  }

 private:
  void advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;
    }
  }

  std::string take_word() {
    std::string out;
    while (i_ < text_.size() && name_char(text_[i_])) {
      out += text_[i_];
      advance();
    }
    return out;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

struct Triple {
  std::string subject;
  Position subject_pos;
  bool is_type = false;  // verb was 'a'
  std::string verb;      // gfo local name when !is_type
  Position verb_pos;
  std::string object;  // gfo local for types, kb local otherwise
  Position object_pos;
};

std::string describe(const Token& t) {
  switch (t.type) {
    case Token::Type::kPrefixKw:
      return "'@prefix'";
    case Token::Type::kName:
      return "'" + t.prefix + ":" + t.text + "'";
    case Token::Type::kIri:
      return "'<" + t.text + ">'";
    case Token::Type::kA:
      return "'a'";
    case Token::Type::kSemicolon:
      return "';'";
    case Token::Type::kDot:
      return "'.'";
    case Token::Type::kBad:
      return "'" + t.text + "'";
    case Token::Type::kEnd:
      return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  std::vector<Triple> triples() {
    while (tok_.type != Token::Type::kEnd) {
      if (!statement()) recover();
    }
    return std::move(triples_);
  }

  std::vector<ParseDiagnostic>& diagnostics() { return diags_; }

 private:
  void bump() {
    last_ = tok_.pos;
    tok_ = lex_.next();
  }

  bool fail(const Position& at, std::string message) {
    diags_.push_back({at.line, at.column, Kind::kSyntax, std::move(message)});
    return false;
  }
  bool unexpected(std::string_view expected) {
    const Position at = tok_.type == Token::Type::kEnd ? last_ : tok_.pos;
    return fail(at, "expected " + std::string(expected) + ", found " +
                        describe(tok_));
  }

  void recover() {
    while (tok_.type != Token::Type::kEnd && tok_.type != Token::Type::kDot) {
      bump();
    }
    if (tok_.type == Token::Type::kDot) bump();
  }

  bool statement() {
    if (tok_.type == Token::Type::kPrefixKw) return prefix_decl();
    std::vector<Triple> pending;
    if (tok_.type != Token::Type::kName) return unexpected("a subject");
    if (!tok_.prefix.empty()) {
      return fail(tok_.pos, "subject " + describe(tok_) +
                                " must be in the ':' namespace");
    }
    if (!name_ok(tok_)) return false;
    const std::string subject = tok_.text;
    const Position subject_pos = tok_.pos;
    bump();
    for (;;) {
      Triple t{subject, subject_pos, false, {}, tok_.pos, {}, {}};
      if (tok_.type == Token::Type::kA) {
        t.is_type = true;
      } else if (tok_.type == Token::Type::kName && tok_.prefix == "gfo") {
        if (!name_ok(tok_)) return false;
        t.verb = tok_.text;
      } else if (tok_.type == Token::Type::kName) {
        return fail(tok_.pos, "predicate " + describe(tok_) +
                                  " must be in the 'gfo:' namespace");
      } else {
        return unexpected("'a' or a gfo: predicate");
      }
      bump();
      if (tok_.type != Token::Type::kName) return unexpected("an object");
      const std::string want = t.is_type ? "gfo" : "";
      if (tok_.prefix != want) {
        return fail(tok_.pos, "object " + describe(tok_) + " must be in the '" +
                                  want + ":' namespace");
      }
      if (!name_ok(tok_)) return false;
      t.object = tok_.text;
      t.object_pos = tok_.pos;
      bump();
      pending.push_back(std::move(t));
      if (tok_.type == Token::Type::kSemicolon) {
        bump();
        // Trailing ';' before '.' is allowed.
        if (tok_.type == Token::Type::kDot) break;
        continue;
      }
      if (tok_.type == Token::Type::kDot) break;
      return unexpected("';' or '.'");
    }
    bump();
    for (auto& t : pending) triples_.push_back(std::move(t));
    return true;
  }

  bool name_ok(const Token& t) {
    if (t.prefix != "" && t.prefix != "gfo") {
      return fail(t.pos, "undeclared prefix '" + t.prefix + ":'");
    }
    if (!is_valid_identifier(t.text)) {
      return fail(t.pos, "invalid local name in " + describe(t));
    }
    return true;
  }

  bool prefix_decl() {
    bump();
    if (tok_.type != Token::Type::kName || !tok_.text.empty()) {
      return unexpected("a prefix name such as 'gfo:'");
    }
    const Token name = tok_;
    bump();
    if (tok_.type != Token::Type::kIri) return unexpected("an IRI");
    std::string_view required;
    if (name.prefix == "gfo") {
      required = kGfoNamespace;
    } else if (name.prefix.empty()) {
      required = kKbNamespace;
    } else {
      return fail(name.pos, "only the 'gfo:' and ':' prefixes are supported");
    }
    if (tok_.text != required) {
      return fail(tok_.pos, "prefix '" + name.prefix + ":' must be bound to <" +
                                std::string(required) + ">");
    }
    bump();
    if (tok_.type != Token::Type::kDot) return unexpected("'.'");
    bump();
    return true;
  }

  Lexer lex_;
  Token tok_;
  Position last_;
  std::vector<Triple> triples_;
  std::vector<ParseDiagnostic> diags_;
};

void diag(std::vector<ParseDiagnostic>& out, const Position& at, Kind kind,
          std::string message) {
  out.push_back({at.line, at.column, kind, std::move(message)});
}

}  // namespace

ParseResult parse(std::string_view text) {
  Parser parser(text);
  const std::vector<Triple> triples = parser.triples();
  std::vector<ParseDiagnostic> diags = std::move(parser.diagnostics());

  // Relation-instance nodes: subjects typed with a reified predicate.
  struct Node {
    const PredicateSig* sig = nullptr;
    Position type_pos;
    std::vector<std::optional<std::string>> args;
  };
  std::map<std::string, Node> nodes;
  for (const auto& t : triples) {
    if (!t.is_type) continue;
    const PredicateSig* p = predicate_for_local_name(t.object);
    if (!p || p->arity() < 3) continue;
    auto [it, fresh] = nodes.try_emplace(t.subject);
    if (!fresh && it->second.sig != p) {
      diag(diags, t.object_pos, Kind::kSyntax,
           "':" + t.subject + "' already has relation type gfo:" +
               local_name(*it->second.sig));
      continue;
    }
    if (fresh) {
      it->second = Node{p, t.object_pos,
                        std::vector<std::optional<std::string>>(p->arity())};
    }
  }

  KnowledgeBase kb = new_gfo_kb();
  auto add = [&](const Position& at, std::string_view pred, Tuple args,
                 std::optional<EntityId> id = std::nullopt) {
    for (const auto& a : args) {
      if (nodes.contains(a.str())) {
        diag(diags, at, Kind::kSyntax,
             "':" + a.str() + "' names a relation instance, not an entity");
        return;
      }
    }
    try {
      kb.add(pred, std::move(args), std::move(id));
    } catch (const Error& e) {
      diag(diags, at, Kind::kSyntax, e.what());
    }
  };

  for (const auto& t : triples) {
    auto node = nodes.find(t.subject);
    if (t.is_type) {
      const PredicateSig* p = predicate_for_local_name(t.object);
      if (!p) {
        diag(diags, t.object_pos, Kind::kUnknownPredicate,
             "unknown class gfo:" + t.object);
      } else if (p->arity() == 2) {
        diag(diags, t.object_pos, Kind::kArity,
             "gfo:" + t.object + " is a binary property, not a class");
      } else if (p->arity() == 1) {
        if (node != nodes.end()) {
          diag(diags, t.object_pos, Kind::kSyntax,
               "relation instance ':" + t.subject +
                   "' cannot also be typed gfo:" + t.object);
        } else {
          add(t.object_pos, p->name, Tuple{EntityId(t.subject)});
        }
      }
      continue;
    }
    const PredicateSig* p = predicate_for_local_name(t.verb);
    if (node != nodes.end()) {
      Node& n = node->second;
      const auto& roles = n.sig->roles;
      auto r = std::find(roles.begin(), roles.end(), t.verb);
      if (r == roles.end()) {
        diag(diags, t.verb_pos, Kind::kArity,
             "gfo:" + t.verb + " is not a role of gfo:" + local_name(*n.sig));
        continue;
      }
      auto& slot = n.args[static_cast<std::size_t>(r - roles.begin())];
      if (slot) {
        diag(diags, t.verb_pos, Kind::kDuplicateRole,
             "role gfo:" + t.verb + " given twice for ':" + t.subject + "'");
        continue;
      }
      slot = t.object;
      continue;
    }
    if (p && p->arity() == 2) {
      add(t.verb_pos, p->name, Tuple{EntityId(t.subject), EntityId(t.object)});
    } else if (p) {
      diag(diags, t.verb_pos, Kind::kArity,
           "gfo:" + t.verb + " is a class, not a binary property");
    } else if (role_names().contains(t.verb)) {
      diag(diags, t.verb_pos, Kind::kSyntax,
           "role gfo:" + t.verb + " used on ':" + t.subject +
               "', which is not a relation instance");
    } else {
      diag(diags, t.verb_pos, Kind::kUnknownPredicate,
           "unknown property gfo:" + t.verb);
    }
  }

  // Nodes in document order of their type triple.
  std::vector<std::pair<const std::string*, Node*>> ordered;
  for (auto& [name, n] : nodes) ordered.emplace_back(&name, &n);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second->type_pos.line, a.second->type_pos.column) <
           std::pair(b.second->type_pos.line, b.second->type_pos.column);
  });
  for (auto [name, n] : ordered) {
    std::string missing;
    for (std::size_t i = 0; i < n->args.size(); ++i) {
      if (n->args[i]) continue;
      if (!missing.empty()) missing += ", ";
      missing += n->sig->roles[i];
    }
    if (!missing.empty()) {
      diag(diags, n->type_pos, Kind::kMissingRole,
           "':" + *name + "' lacks role(s) " + missing);
      continue;
    }
    Tuple args;
    for (const auto& a : n->args) args.emplace_back(*a);
    // Re-stating an existing fact under a second node keeps the first id.
    if (kb.contains(n->sig->name, args)) continue;
    add(n->type_pos, n->sig->name, std::move(args), EntityId(*name));
  }

  std::stable_sort(diags.begin(), diags.end(), [](const auto& a,
                                                  const auto& b) {
    return std::pair(a.line, a.column) < std::pair(b.line, b.column);
  });
  ParseResult result;
  if (diags.empty()) {
    result.kb = std::move(kb);
  } else {
    result.diagnostics = std::move(diags);
  }
  return result;
}

std::string serialize(const KnowledgeBase& kb) {
  std::ostringstream os;
  os << "@prefix gfo: <" << kGfoNamespace << "> .\n";
  os << "@prefix : <" << kKbNamespace << "> .\n";
  const auto assertions = kb.canonical_form();
  if (!assertions.empty()) os << '\n';
  for (const auto& a : assertions) {
    const PredicateSig& sig = kb.signature().at(a.predicate);
    const std::string name = local_name(sig);
    if (sig.arity() == 1) {
      os << ':' << a.args[0] << " a gfo:" << name << " .\n";
    } else if (sig.arity() == 2) {
      os << ':' << a.args[0] << " gfo:" << name << " :" << a.args[1]
         << " .\n";
    } else {
      os << ':' << *a.instance_id << " a gfo:" << name;
      for (std::size_t i = 0; i < sig.arity(); ++i) {
        os << " ;\n    gfo:" << sig.roles[i] << " :" << a.args[i];
      }
      os << " .\n";
    }
  }
  return os.str();
}

}  // namespace gfoart::turtle
