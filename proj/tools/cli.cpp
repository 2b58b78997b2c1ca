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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gfoart/error.hpp"
#include "gfoart/modelgen.hpp"
#include "gfoart/query.hpp"
#include "gfoart/turtle.hpp"
#include "gfoart/vocab.hpp"

namespace gfoart::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string input_path;
  std::string profiles;
  std::string format = "text";
  bool strict = false;
  bool verbose = false;
  // scaffold
  std::string kind;
  bool requirements = false;
  bool space = false;
  std::string output_path;
  // oracle
  std::vector<std::string> require;
  std::optional<std::size_t> max_size;
  std::string strategy = "chase";
  // query
  std::string pattern;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t default_max_size() {
  const char* env = std::getenv("GFOART_MAX_SIZE");
  if (!env || !*env) return kMaxModelBound;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("GFOART_MAX_SIZE is not a number: ") + env);
  }
}

ProfileSet profiles_of(const Config& c) {
  return c.profiles.empty() ? default_profiles() : parse_profiles(c.profiles);
}

std::optional<KnowledgeBase> load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  auto parsed = turtle::parse(text.str());
  for (const auto& d : parsed.diagnostics) {
    err << path << ':' << turtle::to_string(d) << '\n';
  }
  return std::move(parsed.kb);
}

int cmd_validate(const Config& c, std::ostream& out, std::ostream& err) {
  const ProfileSet profiles = profiles_of(c);
  auto kb = load(c.input_path, err);
  if (!kb) return kExitDiagnostics;
  const auto report = check(*kb, profiles, {c.strict});
  if (c.format == "json") {
    out << to_json(report) << '\n';
  } else {
    out << explain(report, c.verbose ? Verbosity::kMax : Verbosity::kNormal);
  }
  return report.compliant() ? kExitOk : kExitViolations;
}

int cmd_scaffold(const Config& c, std::ostream& out, std::ostream&) {
  const KnowledgeBase kb =
      scaffold_artifact(c.kind, {c.requirements, c.space});
  const std::string text = turtle::serialize(kb);
  if (c.output_path.empty() || c.output_path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(c.output_path, std::ios::binary);
  if (!(file << text)) throw UsageError("cannot write " + c.output_path);
  return kExitOk;
}

int cmd_oracle(const Config& c, std::ostream& out, std::ostream&) {
  const std::size_t bound = c.max_size ? *c.max_size : default_max_size();
  if (bound > kMaxModelBound) {
    throw UsageError("--max-size must be at most " +
                     std::to_string(kMaxModelBound));
  }
  const auto axioms = axiom_catalog(profiles_of(c), {c.strict});
  std::vector<Assertion> must_contain;
  for (const auto& r : c.require) {
    must_contain.push_back(parse_ground_atom(r, *gfo_signature()));
  }
  SearchOptions options;
  options.strategy = c.strategy == "brute" ? SearchStrategy::kBruteForce
                                           : SearchStrategy::kChase;
  const auto result = find_model(axioms, bound, must_contain, options);
  if (c.format == "json") {
    json j;
    j["verdict"] = std::string(to_string(result.verdict));
    j["bound"] = result.bound;
    j["models_enumerated"] = result.models_enumerated;
    if (result.witness) {
      j["entities"] = result.witness->entity_count();
      j["witness"] = turtle::serialize(*result.witness);
    } else {
      j["witness"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << to_string(result);
  }
  return result.satisfiable() ? kExitOk : kExitViolations;
}

int cmd_query(const Config& c, std::ostream& out, std::ostream& err) {
  // Validate the pattern before touching the file so usage errors win.
  const auto atoms = parse_pattern(c.pattern, *gfo_signature());
  auto kb = load(c.input_path, err);
  if (!kb) return kExitDiagnostics;
  const auto bindings = match_conjunction(*kb, atoms);
  if (c.format == "json") {
    json j = json::array();
    for (const auto& b : bindings) {
      json row = json::object();
      for (const auto& [k, v] : b) row[k] = v.str();
      j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& b : bindings) {
      out << (b.empty() ? std::string("true") : to_string(b)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_axioms(const Config& c, std::ostream& out, std::ostream&) {
  const auto axioms = axiom_catalog(profiles_of(c), {c.strict});
  if (c.format == "json") {
    json j = json::array();
    for (const auto& a : axioms) {
      j.push_back({{"axiom", a.id},
                   {"citation", a.citation},
                   {"quote", a.quote},
                   {"formula", to_string(a.formula)}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& a : axioms) {
      out << a.id << '\t' << a.citation << "\t\"" << a.quote << "\"\t"
          << to_string(a.formula) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"Validate, scaffold and explore GFO artifact knowledge bases",
               "gfoart"};
  app.require_subcommand(1);

  auto add_profile = [&c](CLI::App* sub) {
    sub->add_option("--profile", c.profiles,
                    "Comma-separated profiles: space, artifact, requirements, "
                    "integration, constitution, or all");
  };
  auto add_format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_strict = [&c](CLI::App* sub) {
    sub->add_flag("--strict", c.strict,
                  "Require a unique defining feature set and tie "
                  "intendToBuildSpec to intendToBuild");
  };

  auto* validate = app.add_subcommand("validate", "Check a Turtle KB");
  validate->add_option("file", c.input_path, "Turtle file")->required();
  add_profile(validate);
  add_format(validate);
  add_strict(validate);
  validate->add_flag("-v,--verbose", c.verbose,
                     "Print the violated formula under each axiom");

  auto* scaffold =
      app.add_subcommand("scaffold", "Write a compliant artifact KB");
  scaffold->add_option("kind", c.kind, "Artifact kind name")->required();
  scaffold->add_flag("--requirements", c.requirements,
                     "Add requirement and audience pairs");
  scaffold->add_flag("--space", c.space, "Add material-object assertions");
  scaffold->add_option("-o,--output", c.output_path,
                       "Output file (default: standard output)");

  auto* oracle =
      app.add_subcommand("oracle", "Search for a smallest model of a profile");
  add_profile(oracle);
  add_format(oracle);
  add_strict(oracle);
  oracle->add_option("--require", c.require,
                     "Ground atom the model must contain, e.g. 'Artifact(x1)'");
  oracle->add_option("--max-size", c.max_size,
                     "Entity bound (default: GFOART_MAX_SIZE or 12)");
  oracle->add_option("--strategy", c.strategy, "Search strategy")
      ->check(CLI::IsMember({"chase", "brute"}));

  auto* query = app.add_subcommand("query", "Match a conjunctive pattern");
  query->add_option("file", c.input_path, "Turtle file")->required();
  query->add_option("pattern", c.pattern,
                    "Atoms with ?variables, e.g. 'Artifact(?x), "
                    "is-instance-of(?x, ?K)'")
      ->required();
  add_format(query);

  auto* axioms = app.add_subcommand("axioms", "List the axiom catalog");
  add_profile(axioms);
  add_format(axioms);
  add_strict(axioms);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) err << app.help();
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(c, out, err);
    if (scaffold->parsed()) return cmd_scaffold(c, out, err);
    if (oracle->parsed()) return cmd_oracle(c, out, err);
    if (query->parsed()) return cmd_query(c, out, err);
    return cmd_axioms(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gfoart::cli
