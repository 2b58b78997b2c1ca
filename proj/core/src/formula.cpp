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

#include "gfoart/formula.hpp"

#include <sstream>
#include <utility>

namespace gfoart {

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<Term> terms;
  std::vector<Formula> children;
};

Formula make_formula(Formula::Kind kind, std::string name,
                     std::vector<Term> terms, std::vector<Formula> children) {
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{
      kind, std::move(name), std::move(terms), std::move(children)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::predicate() const noexcept { return node_->name; }
const std::vector<Term>& Formula::terms() const noexcept {
  return node_->terms;
}
const std::vector<Formula>& Formula::children() const noexcept {
  return node_->children;
}
const std::string& Formula::variable() const noexcept { return node_->name; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->name == b.node_->name &&
         a.terms() == b.terms() && a.children() == b.children();
}

Term var(std::string name) { return {Term::Kind::kVariable, std::move(name)}; }
Term constant(std::string name) {
  return {Term::Kind::kConstant, std::move(name)};
}

Formula atom(std::string predicate, std::vector<Term> args) {
  return make_formula(Formula::Kind::kAtom, std::move(predicate),
                      std::move(args), {});
}
Formula eq(Term lhs, Term rhs) {
  return make_formula(Formula::Kind::kEq, {}, {std::move(lhs), std::move(rhs)},
                      {});
}
Formula negate(Formula f) {
  return make_formula(Formula::Kind::kNot, {}, {}, {std::move(f)});
}
Formula conj(std::vector<Formula> fs) {
  return make_formula(Formula::Kind::kAnd, {}, {}, std::move(fs));
}
Formula disj(std::vector<Formula> fs) {
  return make_formula(Formula::Kind::kOr, {}, {}, std::move(fs));
}
Formula implies(Formula antecedent, Formula consequent) {
  return make_formula(Formula::Kind::kImplies, {}, {},
                      {std::move(antecedent), std::move(consequent)});
}
Formula iff(Formula a, Formula b) {
  return conj({implies(a, b), implies(b, a)});
}
Formula forall(std::string v, Formula f) {
  return make_formula(Formula::Kind::kForall, std::move(v), {}, {std::move(f)});
}
Formula exists(std::string v, Formula f) {
  return make_formula(Formula::Kind::kExists, std::move(v), {}, {std::move(f)});
}
Formula exists_unique(std::string v, Formula f) {
  return make_formula(Formula::Kind::kExistsUnique, std::move(v), {},
                      {std::move(f)});
}
Formula forall(const std::vector<std::string>& vs, Formula f) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) f = forall(*it, f);
  return f;
}
Formula exists(const std::vector<std::string>& vs, Formula f) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) f = exists(*it, f);
  return f;
}
Formula forall(std::initializer_list<std::string> vs, Formula f) {
  return forall(std::vector<std::string>(vs), std::move(f));
}
Formula exists(std::initializer_list<std::string> vs, Formula f) {
  return exists(std::vector<std::string>(vs), std::move(f));
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kEq:
      for (const auto& t : f.terms()) {
        if (t.is_variable() && !bound.contains(t.name)) out.insert(t.name);
      }
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
    case Formula::Kind::kExistsUnique: {
      const bool fresh = bound.insert(f.variable()).second;
      collect_free(f.child(0), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is_quantifier()) out.insert(f.variable());
  for (const auto& t : f.terms()) {
    if (t.is_variable()) out.insert(t.name);
  }
  for (const auto& c : f.children()) collect_variables(c, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& v,
                   const Term& replacement) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kEq: {
      std::vector<Term> terms = f.terms();
      for (auto& t : terms) {
        if (t.is_variable() && t.name == v) t = replacement;
      }
      if (f.kind() == Formula::Kind::kEq) {
        return eq(std::move(terms[0]), std::move(terms[1]));
      }
      return atom(f.predicate(), std::move(terms));
    }
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
    case Formula::Kind::kExistsUnique:
      if (f.variable() == v) return f;
      return make_formula(f.kind(), f.variable(), {},
                          {substitute(f.child(0), v, replacement)});
    default: {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const auto& c : f.children()) {
        kids.push_back(substitute(c, v, replacement));
      }
      return make_formula(f.kind(), {}, {}, std::move(kids));
    }
  }
}

Formula expand_exists_unique(const Formula& f) {
  const std::string& v = f.variable();
  const Formula& body = f.child(0);
  std::set<std::string> used;
  collect_variables(f, used);
  std::string u = v + "_";
  while (used.contains(u)) u += "_";
  return exists(v, conj({body, forall(u, implies(substitute(body, v, var(u)),
                                                 eq(var(u), var(v))))}));
}

namespace {

void print(std::ostream& os, const Formula& f, bool nested);

void print_terms(std::ostream& os, const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ", ";
    os << terms[i].name;
  }
}

void print_nary(std::ostream& os, const Formula& f, const char* op,
                bool nested) {
  if (nested) os << '(';
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    if (i) os << op;
    print(os, f.child(i), true);
  }
  if (nested) os << ')';
}

void print(std::ostream& os, const Formula& f, bool nested) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      os << f.predicate() << '(';
      print_terms(os, f.terms());
      os << ')';
      return;
    case Formula::Kind::kEq:
      os << f.terms()[0].name << " = " << f.terms()[1].name;
      return;
    case Formula::Kind::kNot:
      os << "¬";
      print(os, f.child(0), true);
      return;
    case Formula::Kind::kAnd:
      print_nary(os, f, " ∧ ", nested);
      return;
    case Formula::Kind::kOr:
      print_nary(os, f, " ∨ ", nested);
      return;
    case Formula::Kind::kImplies:
      print_nary(os, f, " → ", nested);
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
    case Formula::Kind::kExistsUnique: {
      // Collapse runs of the same quantifier: ∀xyz.
      os << (f.kind() == Formula::Kind::kForall   ? "∀"
             : f.kind() == Formula::Kind::kExists ? "∃"
                                                  : "∃!");
      const Formula* cur = &f;
      os << cur->variable();
      while (cur->kind() != Formula::Kind::kExistsUnique &&
             cur->child(0).kind() == cur->kind()) {
        cur = &cur->child(0);
        os << cur->variable();
      }
      os << ' ';
      const Formula& body = cur->child(0);
      const bool atomic = body.kind() == Formula::Kind::kAtom ||
                          body.kind() == Formula::Kind::kNot ||
                          body.is_quantifier();
      print(os, body, !atomic);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f, false);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f, false);
  return os;
}

std::string to_string(const Binding& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v.str();
  }
  return out;
}

}  // namespace gfoart
