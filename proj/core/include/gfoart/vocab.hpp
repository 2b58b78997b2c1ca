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

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gfoart/folk.hpp"
#include "gfoart/kb.hpp"

namespace gfoart {

enum class Profile { kSpace, kArtifact, kRequirements, kIntegration, kConstitution };

using ProfileSet = std::set<Profile>;

std::string_view to_string(Profile p);
// Throws kUnknownProfile.
Profile parse_profile(std::string_view name);
// Comma-separated list; "all" selects every profile. Throws kUnknownProfile.
ProfileSet parse_profiles(std::string_view csv);

const ProfileSet& all_profiles();
// {artifact, requirements, constitution}.
const ProfileSet& default_profiles();

// The GFO artifact-module vocabulary. Shared by every KB built by this library.
const std::shared_ptr<const Signature>& gfo_signature();
KnowledgeBase new_gfo_kb();

struct NamedAxiom {
  std::string id;
  Formula formula;
  // Short locator used in reports, e.g. "§14 (4)".
  std::string citation;
  std::string quote;
  ProfileSet profiles;
  // Message template; "{v}" is replaced by the witness value of variable v.
  std::string message;
};

struct CatalogOptions {
  // A12 requires exactly one defining feature set, and intendToBuildSpec must
  // be accompanied by the matching intendToBuild.
  bool strict = false;
};

// Catalog order: M*, A1..A13, A14, INT1, C*. Empty profile set, empty result.
std::vector<NamedAxiom> axiom_catalog(const ProfileSet& profiles,
                                      CatalogOptions options = {});

std::vector<Witness> find_violations(const KnowledgeBase& kb,
                                     const NamedAxiom& axiom);

std::string instantiate(std::string_view message_template,
                        const Binding& binding);

struct ViolationEntry {
  std::string axiom;
  std::string citation;
  std::string quote;
  std::string message_template;
  Formula formula;
  std::vector<Binding> witnesses;

  std::string message() const;
};

struct ViolationReport {
  ProfileSet profiles;
  std::vector<ViolationEntry> violations;
  std::size_t axioms_checked = 0;

  bool compliant() const noexcept { return violations.empty(); }
  std::size_t violated() const noexcept { return violations.size(); }
  std::size_t witness_count() const noexcept;
  std::set<std::string> violated_axioms() const;
};

ViolationReport check(const KnowledgeBase& kb, const ProfileSet& profiles,
                      CatalogOptions options = {});

enum class Verbosity { kNormal, kMax };

// One line per witness: "ID: citation "quote": binding: message".
std::string explain(const ViolationReport& report,
                    Verbosity verbosity = Verbosity::kNormal);

// {"profiles":[...],"violations":[{"axiom","citation","witnesses","message"}],
//  "counts":{"axioms_checked","violated"}}
std::string to_json(const ViolationReport& report);

}  // namespace gfoart
