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

#include "gfoart/vocab.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gfoart/error.hpp"

namespace gfoart {

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::kSpace:
      return "space";
    case Profile::kArtifact:
      return "artifact";
    case Profile::kRequirements:
      return "requirements";
    case Profile::kIntegration:
      return "integration";
    case Profile::kConstitution:
      return "constitution";
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  for (Profile p : all_profiles()) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::kUnknownProfile, std::string(name));
}

ProfileSet parse_profiles(std::string_view csv) {
  ProfileSet out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    auto item = csv.substr(0, comma);
    csv = comma == std::string_view::npos ? std::string_view{}
                                          : csv.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(all_profiles().begin(), all_profiles().end());
    } else {
      out.insert(parse_profile(item));
    }
  }
  return out;
}

const ProfileSet& all_profiles() {
  static const ProfileSet all{Profile::kSpace, Profile::kArtifact,
                              Profile::kRequirements, Profile::kIntegration,
                              Profile::kConstitution};
  return all;
}

const ProfileSet& default_profiles() {
  static const ProfileSet defaults{Profile::kArtifact, Profile::kRequirements,
                                   Profile::kConstitution};
  return defaults;
}

namespace {

Signature build_signature() {
  std::vector<PredicateSig> p;
  auto unary = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) p.push_back(PredicateSig::unary(n));
  };
  auto binary = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) p.push_back(PredicateSig::binary(n));
  };
  // Space module.
  unary({"MatE", "MOB", "Fluid", "Gas", "Stuff", "SReg", "Conn", "ObSit", "ML",
         "MS", "MStr", "MVert"});
  binary({"consists_of", "contained_in", "environ", "has_density", "has_mass",
          "lifetime", "maxbd", "mbd", "mpart", "natmbd", "occ", "occbd",
          "touch", "spart", "sb"});
  // Individuals and categories.
  unary({"Individual", "Category"});
  binary({"is-instance-of"});
  // Artifacts, kinds, designs, models, makers.
  unary({"Artifact", "ArtifKind", "ArtifDesign", "ArtifModel", "Audienceof"});
  binary({"hasDesign", "hasModel", "Maker"});
  p.push_back(PredicateSig::nary("intendToBuild", {"agent", "object", "kind"}));
  p.push_back(PredicateSig::nary(
      "intendToBuildSpec", {"agent", "object", "model", "design", "kind"}));
  // Concepts and criterial features.
  p.push_back(PredicateSig::binary("Is-Criterial-Feature", "feature", "kind"));
  p.push_back(PredicateSig::binary("Criterial-Features", "set", "kind"));
  binary({"isDefinedby", "hasMember"});
  p.push_back(
      PredicateSig::nary("ConceptOf", {"concept", "kind", "features"}));
  p.push_back(PredicateSig::nary("hasConcept",
                                 {"agent", "concept", "kind", "features"}));
  p.push_back(PredicateSig::nary("hasCriterialFeature",
                                 {"artifact", "feature", "kind"}));
  // Audiences, standard definitions, requirements.
  binary({"Designer", "Researcher", "User", "OtherStakeholder", "Institution"});
  p.push_back(PredicateSig::nary("StandardDef",
                                 {"def", "kind", "features", "audience"}));
  p.push_back(PredicateSig::nary("specifiesStandDef",
                                 {"audience", "kind", "features", "def"}));
  p.push_back(PredicateSig::nary("Krequirement",
                                 {"requirement", "kind", "audience"}));
  p.push_back(PredicateSig::nary("requirement",
                                 {"requirement", "artifact", "audience"}));
  p.push_back(PredicateSig::nary("DesignRequirement",
                                 {"requirement", "design", "audience"}));
  p.push_back(PredicateSig::nary("ModelRequirement",
                                 {"requirement", "model", "audience"}));
  p.push_back(PredicateSig::nary(
      "PartRequirement", {"requirement", "part", "artifact", "audience"}));
  p.push_back(PredicateSig::nary(
      "FeatRequirement", {"requirement", "feature", "artifact", "audience"}));
  p.push_back(PredicateSig::nary("specifiesKRequirement",
                                 {"audience", "requirement", "kind"}));
  p.push_back(PredicateSig::nary("specifiesDRequirement",
                                 {"audience", "requirement", "design"}));
  p.push_back(PredicateSig::nary("specifiesMRequirement",
                                 {"audience", "requirement", "model"}));
  p.push_back(PredicateSig::nary("specifiesRequirement",
                                 {"audience", "requirement", "artifact"}));
  p.push_back(
      PredicateSig::nary("specifiesFeatRequirement",
                         {"audience", "requirement", "feature", "artifact"}));
  p.push_back(
      PredicateSig::nary("specifiesPartRequirement",
                         {"audience", "requirement", "part", "artifact"}));
  // Production actions.
  p.push_back(
      PredicateSig::nary("IntentionalBuild", {"artifact", "agent", "kind"}));
  p.push_back(PredicateSig::nary("IntentionalBestow",
                                 {"object", "agent", "kind", "features"}));
  p.push_back(PredicateSig::nary("IntentionalSelect",
                                 {"agent", "material", "artifact", "kind"}));
  // Mental representation.
  p.push_back(PredicateSig::nary(
      "MentRepresArt",
      {"repr", "artifact", "kind", "model", "design", "features"}));
  p.push_back(PredicateSig::nary("hasMentRepresentation",
                                 {"agent", "repr", "artifact"}));
  p.push_back(PredicateSig::nary(
      "transformsTo", {"agent", "repr", "artifact", "design", "model"}));
  // Object-process integration.
  unary({"MatCont", "Proc", "Presential", "TimePoint"});
  binary({"tempext"});
  p.push_back(
      PredicateSig::nary("exhib", {"continuant", "time", "presential"}));
  p.push_back(PredicateSig::nary("procbd", {"process", "time", "presential"}));
  return Signature(std::move(p));
}

Formula A(std::string pred, std::initializer_list<const char*> vars) {
  std::vector<Term> terms;
  for (const char* v : vars) terms.push_back(var(v));
  return atom(std::move(pred), std::move(terms));
}

std::vector<NamedAxiom> build_catalog(bool strict) {
  using P = Profile;
  std::vector<NamedAxiom> c;
  auto add = [&](std::string id, Formula f, std::string cite,
                 std::string quote, P profile, std::string msg) {
    c.push_back({std::move(id), std::move(f), std::move(cite),
                 std::move(quote), {profile}, std::move(msg)});
  };

  // Space module: material entities and objects.
  add("M1",
      forall("x", implies(disj({A("MOB", {"x"}), A("Fluid", {"x"}),
                                A("Gas", {"x"})}),
                          A("MatE", {"x"}))),
      "§5 M1", "can be either a solid object, a fluid, or a gaseous entity", P::kSpace,
      "{x} is a solid, fluid or gaseous entity but not a material entity");
  add("M2",
      forall("x", implies(A("MatE", {"x"}),
                          exists("y", conj({A("Stuff", {"y"}),
                                            A("consists_of", {"x", "y"})})))),
      "§5 M2", "All material entities consist of stuff", P::kSpace,
      "material entity {x} consists of no stuff");
  add("M3",
      forall("x", implies(A("MatE", {"x"}),
                          exists({"y", "z"},
                                 conj({A("has_mass", {"x", "y"}),
                                       A("has_density", {"x", "z"})})))),
      "§5 M3", "have mass and density", P::kSpace,
      "material entity {x} lacks a mass or a density quality");
  add("M4",
      forall("x", implies(A("MOB", {"x"}),
                          exists("y", conj({A("SReg", {"y"}),
                                            A("occ", {"x", "y"}),
                                            A("Conn", {"y"})})))),
      "§5 M4", "occupies a connected space region", P::kSpace,
      "material object {x} occupies no connected space region");
  add("M5",
      forall("x", implies(A("MOB", {"x"}), exists("y", A("mbd", {"y", "x"})))),
      "§5 M5", "not assumed to be maximal", P::kSpace,
      "material object {x} has no material boundary");
  add("M6",
      forall({"x", "y", "z"},
             implies(conj({A("MOB", {"x"}), A("mbd", {"y", "x"}),
                           A("mpart", {"z", "y"})}),
                     A("mbd", {"z", "x"}))),
      "§5 M6", "Every material part of the boundary", P::kSpace,
      "part {z} of boundary {y} is not itself a boundary of {x}");
  add("M7",
      forall({"x", "y", "z"},
             implies(conj({A("MOB", {"x"}), A("occ", {"x", "y"}),
                           A("mbd", {"z", "x"})}),
                     exists_unique("u", conj({A("sb", {"u", "y"}),
                                              A("occ", {"z", "u"})})))),
      "§5 M7", "uniquely determined boundary of the occupied", P::kSpace,
      "boundary {z} of {x} does not occupy exactly one boundary of region {y}");
  add("M8",
      forall("x",
             implies(A("MOB", {"x"}), exists("y", A("environ", {"y", "x"})))),
      "§5 M8", "there exists an environment", P::kSpace,
      "material object {x} has no environment");
  add("M9",
      forall({"x", "y"},
             implies(conj({A("MOB", {"x"}), A("environ", {"y", "x"})}),
                     conj({A("ObSit", {"y"}),
                           A("contained_in", {"x", "y"})}))),
      "§5 M9", "object-situation that contains this material object",
      P::kSpace,
      "environment {y} of {x} is not an object-situation containing it");
  add("M13",
      forall({"x", "y", "z"},
             implies(conj({A("mpart", {"y", "x"}), A("occ", {"x", "z"})}),
                     exists("u", conj({A("spart", {"u", "z"}),
                                       A("occ", {"y", "u"})})))),
      "§5 M13", "occupies a spatial part of the", P::kSpace,
      "part {y} of {x} occupies no spatial part of region {z}");
  add("M15",
      forall({"x", "y"},
             implies(conj({A("MOB", {"x"}), A("environ", {"y", "x"})}),
                     negate(exists("z", conj({A("MatE", {"z"}),
                                              A("mpart", {"z", "x"}),
                                              A("mpart", {"z", "y"})}))))),
      "§5 M15", "no common material part with an environment", P::kSpace,
      "material object {x} shares a material part with its environment {y}");

  // Individuals and categories. A1 states disjointness only.
  add("A1",
      forall("x",
             implies(A("Individual", {"x"}), negate(A("Category", {"x"})))),
      "§12 (1)", "individuals and categories are disjoint", P::kArtifact,
      "{x} is both an individual and a category");
  add("A2",
      forall({"x", "y"},
             implies(A("is-instance-of", {"x", "y"}), A("Category", {"y"}))),
      "§12 (2)", "individuals instantiate categories", P::kArtifact,
      "{y} is instantiated by {x} but is not a category");
  add("A3",
      forall("x", implies(A("Individual", {"x"}),
                          exists("y", conj({A("Category", {"y"}),
                                            A("is-instance-of", {"x", "y"})})))),
      "§12 (3)", "there is a category of which that individual is an instance",
      P::kArtifact, "individual {x} instantiates no category");

  // Intentionally built objects.
  auto unique_link = [&](const char* type, const char* link, const char* v) {
    return exists_unique(v, conj({A(type, {v}), A(link, {"x", v})}));
  };
  add("A4",
      forall("x", implies(A("Artifact", {"x"}),
                          unique_link("ArtifKind", "is-instance-of", "K"))),
      "§14 (4)", "exactly one artifact kind K", P::kArtifact,
      "artifact {x} has no (or multiple) artifact kind");
  add("A5",
      forall("x", implies(A("Artifact", {"x"}),
                          unique_link("ArtifDesign", "hasDesign", "d"))),
      "§14 (5)", "has one design", P::kArtifact,
      "artifact {x} has no (or multiple) design");
  add("A6",
      forall("x", implies(A("Artifact", {"x"}),
                          unique_link("ArtifModel", "hasModel", "m"))),
      "§14 (6)", "has one model", P::kArtifact,
      "artifact {x} has no (or multiple) model");
  add("A7",
      forall("K", implies(A("ArtifKind", {"K"}),
                          exists("m", A("ArtifModel", {"m"})))),
      "§14 (7)", "there exists at least one model", P::kArtifact,
      "artifact kind {K} exists but no artifact model does");
  add("A8",
      forall("m", implies(A("ArtifModel", {"m"}),
                          exists("d", A("ArtifDesign", {"d"})))),
      "§14 (8)", "there exists at least one design", P::kArtifact,
      "artifact model {m} exists but no artifact design does");
  add("A9",
      forall("x",
             implies(A("Artifact", {"x"}),
                     exists_unique(
                         "K", conj({A("ArtifKind", {"K"}),
                                    exists("y", conj({A("Maker", {"y", "x"}),
                                                      A("intendToBuild",
                                                        {"y", "x", "K"})}))})))),
      "§14 (9)", "exactly one artifact kind K and at least one maker y", P::kArtifact,
      "artifact {x} has no unique kind that a maker of it intends to build");
  if (strict) {
    add("A9S",
        forall({"s", "x", "m", "d", "K"},
               implies(A("intendToBuildSpec", {"s", "x", "m", "d", "K"}),
                       A("intendToBuild", {"s", "x", "K"}))),
        "§14", "intend-To-Build(s, x, m, d, K)", P::kArtifact,
        "{s} intends to build {x} to model {m} and design {d} but has no "
        "intention to build it as {K}");
  }

  // Concepts and criterial features.
  add("A10",
      forall({"s", "x", "K"},
             implies(conj({A("Maker", {"s", "x"}), A("Artifact", {"x"}),
                           A("ArtifKind", {"K"}),
                           A("intendToBuild", {"s", "x", "K"})}),
                     exists({"c", "Q"},
                            conj({A("ConceptOf", {"c", "K", "Q"}),
                                  A("hasConcept", {"s", "c", "K", "Q"})})))),
      "§15 (10)", "has a concept C associated with K", P::kArtifact,
      "maker {s} intends to build {x} as {K} but has no concept of {K}");
  add("A11",
      forall("K", implies(A("ArtifKind", {"K"}),
                          exists("p", A("Is-Criterial-Feature", {"p", "K"})))),
      "§15 (11)", "for all artifact kinds there exists at least one criterial feature", P::kArtifact,
      "artifact kind {K} has no criterial feature");
  {
    Formula defining = conj(
        {A("Criterial-Features", {"Q", "K"}), A("isDefinedby", {"K", "Q"})});
    add("A12",
        forall("K", implies(A("ArtifKind", {"K"}),
                            strict ? exists_unique("Q", defining)
                                   : exists("Q", defining))),
        "§15 (12)", "there exists one set of criterial features Q such that Q defines K", P::kArtifact,
        strict ? "artifact kind {K} is not defined by exactly one criterial "
                 "feature set"
               : "artifact kind {K} is not defined by a criterial feature set");
  }
  add("A13",
      forall("K",
             implies(A("ArtifKind", {"K"}),
                     exists({"s", "Q", "y"},
                            conj({A("StandardDef", {"s", "K", "Q", "y"}),
                                  A("Criterial-Features", {"Q", "K"}),
                                  A("Audienceof", {"y"}),
                                  A("specifiesStandDef",
                                    {"y", "K", "Q", "s"})})))),
      "§17 (13)", "specifies a standard definition s", P::kArtifact,
      "artifact kind {K} has no standard definition specified by an audience");

  // Requirements: one clause per requirement relation.
  auto specified = [&](const char* req, std::initializer_list<const char*> rv,
                       const char* spec, std::initializer_list<const char*> sv) {
    std::vector<std::string> vars(rv.begin(), rv.end());
    std::vector<Term> st{var("a")};
    for (const char* v : sv) st.push_back(var(v));
    return forall(vars, implies(A(req, rv),
                                exists("a", conj({A("Audienceof", {"a"}),
                                                  atom(spec, st)}))));
  };
  add("A14",
      conj({specified("Krequirement", {"n", "K", "y"},
                      "specifiesKRequirement", {"n", "K"}),
            specified("requirement", {"n", "x", "y"}, "specifiesRequirement",
                      {"n", "x"}),
            specified("DesignRequirement", {"n", "d", "y"},
                      "specifiesDRequirement", {"n", "d"}),
            specified("ModelRequirement", {"n", "m", "y"},
                      "specifiesMRequirement", {"n", "m"}),
            specified("PartRequirement", {"n", "p", "x", "y"},
                      "specifiesPartRequirement", {"n", "p", "x"}),
            specified("FeatRequirement", {"n", "p", "x", "y"},
                      "specifiesFeatRequirement", {"n", "p", "x"})}),
      "§17", "there is an audience which specifies them", P::kRequirements,
      "requirement {n} is not specified by any audience");

  // Object-process integration; extents are shared entities.
  add("INT1",
      forall(
          "C",
          implies(
              A("MatCont", {"C"}),
              exists("P",
                     conj({A("Proc", {"P"}),
                           exists("e", conj({A("lifetime", {"e", "C"}),
                                             A("tempext", {"e", "P"})})),
                           forall({"t", "M"},
                                  implies(conj({A("TimePoint", {"t"}),
                                                A("Presential", {"M"})}),
                                          iff(A("exhib", {"C", "t", "M"}),
                                              A("procbd",
                                                {"P", "t", "M"}))))})))),
      "§8", "the boundaries of which coincide with the presentials", P::kIntegration,
      "material continuant {C} has no process with the same extent whose "
      "boundaries coincide with its presentials");

  // Material constitution.
  add("C1",
      forall("x", implies(A("consists_of", {"x", "x"}),
                          negate(A("consists_of", {"x", "x"})))),
      "§7", "material constitution is not reflexive", P::kConstitution,
      "{x} consists of itself");
  add("C2",
      forall({"x", "y"},
             implies(conj({A("consists_of", {"x", "y"}),
                           A("consists_of", {"y", "x"})}),
                     eq(var("x"), var("y")))),
      "§7", "material constitution is not symmetric", P::kConstitution,
      "{x} and {y} consist of each other");
  return c;
}

}  // namespace

const std::shared_ptr<const Signature>& gfo_signature() {
  static const std::shared_ptr<const Signature> sig =
      std::make_shared<const Signature>(build_signature());
  return sig;
}

KnowledgeBase new_gfo_kb() { return KnowledgeBase(gfo_signature()); }

std::vector<NamedAxiom> axiom_catalog(const ProfileSet& profiles,
                                      CatalogOptions options) {
  static const std::vector<NamedAxiom> lenient = build_catalog(false);
  static const std::vector<NamedAxiom> strict = build_catalog(true);
  std::vector<NamedAxiom> out;
  for (const auto& ax : options.strict ? strict : lenient) {
    if (std::any_of(ax.profiles.begin(), ax.profiles.end(),
                    [&](Profile p) { return profiles.contains(p); })) {
      out.push_back(ax);
    }
  }
  return out;
}

std::vector<Witness> find_violations(const KnowledgeBase& kb,
                                     const NamedAxiom& axiom) {
  return find_violations(kb, axiom.id, axiom.formula);
}

std::string instantiate(std::string_view tmpl, const Binding& binding) {
  std::string out;
  out.reserve(tmpl.size());
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl[i] == '{') {
      auto close = tmpl.find('}', i);
      if (close != std::string_view::npos) {
        std::string name(tmpl.substr(i + 1, close - i - 1));
        auto it = binding.find(name);
        out += it == binding.end() ? "{" + name + "}" : it->second.str();
        i = close + 1;
        continue;
      }
    }
    out += tmpl[i++];
  }
  return out;
}

std::string ViolationEntry::message() const {
  std::string out;
  for (const auto& w : witnesses) {
    if (!out.empty()) out += "; ";
    out += instantiate(message_template, w);
  }
  return out;
}

std::size_t ViolationReport::witness_count() const noexcept {
  std::size_t n = 0;
  for (const auto& v : violations) n += v.witnesses.size();
  return n;
}

std::set<std::string> ViolationReport::violated_axioms() const {
  std::set<std::string> out;
  for (const auto& v : violations) out.insert(v.axiom);
  return out;
}

ViolationReport check(const KnowledgeBase& kb, const ProfileSet& profiles,
                      CatalogOptions options) {
  ViolationReport report;
  report.profiles = profiles;
  for (const auto& ax : axiom_catalog(profiles, options)) {
    ++report.axioms_checked;
    auto witnesses = find_violations(kb, ax);
    if (witnesses.empty()) continue;
    ViolationEntry e{ax.id, ax.citation, ax.quote, ax.message, ax.formula, {}};
    for (auto& w : witnesses) e.witnesses.push_back(std::move(w.binding));
    report.violations.push_back(std::move(e));
  }
  return report;
}

std::string explain(const ViolationReport& report, Verbosity verbosity) {
  std::ostringstream os;
  for (const auto& v : report.violations) {
    for (const auto& w : v.witnesses) {
      os << v.axiom << ": " << v.citation << " \"" << v.quote
         << "\": " << to_string(w) << ": "
         << instantiate(v.message_template, w) << '\n';
    }
    if (verbosity == Verbosity::kMax) {
      os << "  " << v.axiom << " formula: " << to_string(v.formula) << '\n';
    }
  }
  if (report.compliant()) {
    os << "OK: 0 violations\n";
  } else {
    os << "FAIL: " << report.witness_count() << " violations of "
       << report.violated() << " axioms\n";
  }
  return os.str();
}

std::string to_json(const ViolationReport& report) {
  nlohmann::ordered_json j;
  j["profiles"] = nlohmann::ordered_json::array();
  for (Profile p : report.profiles) j["profiles"].push_back(to_string(p));
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["axiom"] = v.axiom;
    entry["citation"] = v.citation;
    entry["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : v.witnesses) {
      nlohmann::ordered_json binding = nlohmann::ordered_json::object();
      for (const auto& [k, val] : w) binding[k] = val.str();
      entry["witnesses"].push_back(std::move(binding));
    }
    entry["message"] = v.message();
    j["violations"].push_back(std::move(entry));
  }
  j["counts"]["axioms_checked"] = report.axioms_checked;
  j["counts"]["violated"] = report.violated();
  return j.dump();
}

}  // namespace gfoart
