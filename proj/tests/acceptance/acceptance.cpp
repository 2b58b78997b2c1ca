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

// Acceptance driver. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.

#include <CLI11.hpp>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gfoart/folk.hpp"
#include "gfoart/modelgen.hpp"
#include "gfoart/turtle.hpp"
#include "gfoart/vocab.hpp"
#include "test_support.hpp"

namespace {

using namespace gfoart;
using gfoart::testing::corpus;
using gfoart::testing::fixture;
using gfoart::testing::read_file;

// Pinned limits.
constexpr std::uint32_t kSeed = 20240611;
constexpr std::size_t kOracleKbs = 1000;
constexpr std::size_t kOracleMaxEntities = 8;
constexpr double kOracleSeconds = 60.0;
constexpr std::size_t kRoundTripKbs = 500;
constexpr std::size_t kHashRuns = 3;
constexpr std::size_t kModelBound = 12;
constexpr std::size_t kGoldenMinimalModelSize = 1;
constexpr double kEndToEndSeconds = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Options {
  std::string cli;
  std::string workdir;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

std::string join(const std::set<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ",") + id;
  return out.empty() ? "-" : out;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Runs a shell command; returns its exit status and standard output.
std::pair<int, std::string> run_command(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), n);
  }
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

KnowledgeBase load(const std::string& path) {
  auto parsed = turtle::parse(read_file(path));
  if (!parsed.ok()) {
    throw std::runtime_error(path + ": " +
                             turtle::to_string(parsed.diagnostics.front()));
  }
  return *parsed.kb;
}

Outcome axiom_coverage(const Options& opts) {
  Outcome o;
  const std::vector<std::string> expected_ids = {
      "M1",  "M2",  "M3",  "M4",  "M5",  "M6",  "M7",  "M8",  "M9",  "M13",
      "M15", "A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "A7",  "A8",  "A9",
      "A10", "A11", "A12", "A13", "A14", "INT1", "C1",  "C2"};
  std::vector<std::string> ids;
  for (const auto& a : axiom_catalog(all_profiles())) {
    ids.push_back(a.id);
    if (a.citation.empty() || a.quote.empty()) {
      o.pass = false;
      o.detail += a.id + " lacks a citation or quote; ";
    }
  }
  if (ids != expected_ids) {
    o.pass = false;
    o.detail += "catalog ids differ from the enumerated list; ";
  }

  std::vector<std::string> golden;
  std::istringstream concordance(read_file(fixture("axiom_concordance.tsv")));
  for (std::string line; std::getline(concordance, line);) {
    if (!line.empty() && line[0] != '#') golden.push_back(line);
  }
  const auto [code, text] = run_command(
      shell_quote(opts.cli) + " axioms --profile all --format text");
  std::vector<std::string> actual;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    auto f = split(line, '\t');
    if (f.size() < 3) {
      actual.push_back(line);
      continue;
    }
    actual.push_back(f[0] + "\t" + f[1] + "\t" + f[2]);
  }
  if (code != 0 || actual != golden) {
    o.pass = false;
    o.detail += "axioms output differs from the concordance table; ";
  }
  if (o.pass) {
    o.detail = std::to_string(ids.size()) +
               " axioms, each cited and quoted; axioms output matches the "
               "concordance table";
  }
  return o;
}

Outcome oracle_equivalence(const Options&) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto axioms = axiom_catalog(all_profiles(), {.strict = true});
  std::mt19937 rng(kSeed);
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kOracleKbs; ++i) {
    const KnowledgeBase kb = gfoart::testing::random_gfo_kb(
        rng, {.max_entities = kOracleMaxEntities});
    for (const auto& a : axioms) {
      const bool clean = find_violations(kb, a).empty();
      if (clean != eval_naive(kb, a.formula)) {
        ++mismatches;
        if (mismatches <= 3) o.detail += "kb " + std::to_string(i) + " " + a.id + "; ";
      }
      ++checks;
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  o.pass = mismatches == 0 && seconds < kOracleSeconds;
  std::ostringstream d;
  d << kOracleKbs << " KBs, " << checks << " axiom checks, " << mismatches
    << " mismatches, " << seconds << " s (limit " << kOracleSeconds << " s)";
  o.detail = o.detail.empty() ? d.str() : d.str() + ": " + o.detail;
  return o;
}

Outcome mutation_sensitivity(const Options&) {
  Outcome o;
  const ProfileSet profiles = {Profile::kArtifact, Profile::kRequirements};
  const KnowledgeBase kb =
      scaffold_artifact("Bike", {.with_requirements = true});

  std::map<std::string, std::string> golden;
  std::istringstream in(read_file(fixture("mutation_golden.tsv")));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split(line, '\t');
    if (f.size() == 2) golden[f[0]] = f[1];
  }

  std::size_t mismatched = 0;
  std::vector<std::string> silent;
  const auto muts = mutations(kb);
  for (const auto& m : muts) {
    std::ostringstream key;
    key << m.deleted;
    const std::string violated = join(check(m.kb, profiles).violated_axioms());
    auto it = golden.find(key.str());
    if (it == golden.end() || it->second != violated) ++mismatched;
    if (violated == "-") silent.push_back(key.str());
  }
  if (golden.size() != muts.size()) ++mismatched;
  o.pass = mismatched == 0 && silent.empty();
  o.detail = std::to_string(muts.size()) + " deletions, " +
             std::to_string(mismatched) + " golden mismatches, " +
             std::to_string(silent.size()) + " without any violation";
  if (!silent.empty()) {
    o.detail += ":";
    for (const auto& s : silent) o.detail += "\n    " + s;
  }
  return o;
}

Outcome joint_satisfiability(const Options&) {
  Outcome o;
  const auto axioms = axiom_catalog(default_profiles());
  const std::vector<Assertion> must = {
      {"Artifact", {EntityId("x1")}, std::nullopt}};
  std::vector<std::size_t> sizes;
  for (int run = 0; run < 2; ++run) {
    const auto r = find_model(axioms, kModelBound, must);
    if (!r.satisfiable()) {
      o.pass = false;
      o.detail = "unsatisfiable up to bound " + std::to_string(kModelBound);
      return o;
    }
    const auto report = check(*r.witness, default_profiles());
    if (!report.compliant()) {
      o.pass = false;
      o.detail = "witness has " + std::to_string(report.violated()) +
                 " violated axioms";
      return o;
    }
    sizes.push_back(r.witness->entity_count());
  }
  o.pass = sizes[0] == sizes[1] && sizes[0] == kGoldenMinimalModelSize;
  o.detail = "satisfiable within bound " + std::to_string(kModelBound) +
             ", witness clean, minimal model size " + std::to_string(sizes[0]) +
             " in both runs (golden " +
             std::to_string(kGoldenMinimalModelSize) + ")";
  return o;
}

Outcome round_trip(const Options&) {
  Outcome o;
  std::size_t failures = 0;
  auto roundtrips = [&](const KnowledgeBase& kb) {
    auto parsed = turtle::parse(turtle::serialize(kb));
    return parsed.ok() && parsed.kb->canonical_form() == kb.canonical_form();
  };
  std::mt19937 rng(kSeed);
  for (std::size_t i = 0; i < kRoundTripKbs; ++i) {
    if (!roundtrips(gfoart::testing::random_gfo_kb(
            rng, {.max_entities = kOracleMaxEntities, .explicit_ids = true}))) {
      ++failures;
    }
  }
  const std::vector<std::string> files = {"bike.ttl", "chair.ttl",
                                          "bare-artifact.ttl",
                                          "fish-environment.ttl"};
  std::set<std::size_t> hashes;
  for (std::size_t run = 0; run < kHashRuns; ++run) {
    std::string all;
    for (const auto& f : files) {
      const KnowledgeBase kb = load(corpus(f));
      if (run == 0 && !roundtrips(kb)) ++failures;
      all += turtle::serialize(kb);
    }
    hashes.insert(std::hash<std::string>{}(all));
  }
  o.pass = failures == 0 && hashes.size() == 1;
  o.detail = std::to_string(kRoundTripKbs) + " random KBs and " +
             std::to_string(files.size()) + " corpus files, " +
             std::to_string(failures) + " round-trip failures, " +
             std::to_string(hashes.size()) + " distinct hash(es) over " +
             std::to_string(kHashRuns) + " runs";
  return o;
}

Outcome example_corpus(const Options&) {
  Outcome o;
  auto expect = [&](const std::string& file, const ProfileSet& profiles,
                    auto&& ok, const std::string& want) {
    const auto got = check(load(corpus(file)), profiles).violated_axioms();
    const bool pass = ok(got);
    o.pass = o.pass && pass;
    o.detail += (o.detail.empty() ? "" : "; ") + file + " -> {" + join(got) +
                "} (" + want + ")";
  };
  expect("bike.ttl", all_profiles(),
         [](const std::set<std::string>& s) { return s.empty(); }, "clean");
  expect("constitution-reflexive.ttl", default_profiles(),
         [](const std::set<std::string>& s) {
           return s == std::set<std::string>{"C1"};
         },
         "exactly C1");
  expect("constitution-symmetric.ttl", default_profiles(),
         [](const std::set<std::string>& s) {
           return s == std::set<std::string>{"C2"};
         },
         "exactly C2");
  expect("fish-environment.ttl", {Profile::kSpace},
         [](const std::set<std::string>& s) {
           return !s.contains("M8") && !s.contains("M9");
         },
         "no M8 or M9");
  const auto bike = load(corpus("bike.ttl"));
  std::set<std::string> features;
  for (const auto& t : bike.tuples("hasMember")) features.insert(t[1].str());
  if (features != std::set<std::string>{"handlebars", "saddle", "wheels"}) {
    o.pass = false;
    o.detail += "; bike criterial features are {" + join(features) + "}";
  }
  return o;
}

Outcome int1_behavior(const Options&) {
  Outcome o;
  const ProfileSet integration = {Profile::kIntegration};
  KnowledgeBase kb = load(corpus("int1-pass.ttl"));
  const auto before = check(kb, integration).violated_axioms();
  const auto procbd = kb.tuples("procbd");
  for (const auto& t : procbd) kb.remove("procbd", t);
  const auto after = check(kb, integration).violated_axioms();
  o.pass = before.empty() && !procbd.empty() &&
           after == std::set<std::string>{"INT1"};
  o.detail = "with procbd {" + join(before) + "}, after removing " +
             std::to_string(procbd.size()) + " procbd assertion(s) {" +
             join(after) + "}";
  return o;
}

Outcome end_to_end(const Options& opts) {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(opts.workdir) / "acceptance_e2e";
  fs::create_directories(dir);
  const std::string out = (dir / "bike.ttl").string();
  const std::string cli = shell_quote(opts.cli);
  const auto start = std::chrono::steady_clock::now();
  const auto [code, text] =
      run_command(cli + " scaffold Bike --requirements -o " + shell_quote(out) +
                  " && " + cli + " validate " + shell_quote(out));
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  o.pass = code == 0 && seconds < kEndToEndSeconds;
  std::ostringstream d;
  d << "exit " << code << ", " << seconds << " s (limit " << kEndToEndSeconds
    << " s), output: " << text.substr(0, text.find('\n'));
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfoart acceptance criteria"};
  Options opts;
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")
      ->check(CLI::Range(1, 8));
  app.add_option("--cli", opts.cli, "Path to the gfoart executable")
      ->required();
  app.add_option("--workdir", opts.workdir, "Scratch directory")
      ->default_val(std::filesystem::temp_directory_path().string());
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>>
      criteria = {
          {"axiom coverage", axiom_coverage},
          {"oracle equivalence", oracle_equivalence},
          {"mutation sensitivity", mutation_sensitivity},
          {"joint satisfiability", joint_satisfiability},
          {"round-trip", round_trip},
          {"example corpus", example_corpus},
          {"INT1 behavior", int1_behavior},
          {"end-to-end", end_to_end},
      };
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second(opts);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << o.detail << '\n';
  }
  return all_pass ? 0 : 1;
}
