// Copyright 2026 The lndlab Authors
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

// lndlab: batch front end for the locally nilpotent derivation toolkit.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lndlab/corpus.hpp"
#include "lndlab/error.hpp"
#include "lndlab/groebner.hpp"
#include "lndlab/pipeline.hpp"

#ifndef LNDLAB_CORPUS_DIR
#define LNDLAB_CORPUS_DIR "corpus"
#endif

namespace {

constexpr int kInputError = 3;

struct Args {
  std::string spec_path;
  std::uint64_t seed = 0;
  bool json = false;
  int max_degree = 0;
  unsigned nilpotency_bound = 0;
  std::string prime;
  std::string point;
  std::string dir = LNDLAB_CORPUS_DIR;
  bool update = false;
};

int run_spec(const Args& args, lndlab::Stage stage) {
  using namespace lndlab;
  DerivationSpec spec = parse_spec(args.spec_path);
  PipelineOptions options;
  options.stages = {stage};
  options.seed = args.seed;
  if (args.nilpotency_bound) options.nilpotency_bound = args.nilpotency_bound;
  if (!args.prime.empty()) {
    bool known = spec.plinth && std::any_of(spec.plinth->primes.begin(), spec.plinth->primes.end(),
                                            [&](const PrimeSpec& p) { return p.name == args.prime; });
    if (!known) throw Error("unknown plinth prime '" + args.prime + "'");
    options.prime = args.prime;
  }
  if (!args.point.empty()) {
    Point p = parse_point(args.point);
    for (const auto& [k, v] : p) {
      bool known = std::any_of(spec.kernel.begin(), spec.kernel.end(), [&](const auto& g) { return g.name == k; });
      if (!known) throw Error("--point: '" + k + "' is not a kernel generator");
    }
    options.point = p;
  }
  AnalysisReport report = run_pipeline(spec, options);
  std::cout << (args.json ? emit_json(report) : emit_text(report));
  return report.exit_code();
}

int run_corpus_command(const Args& args) {
  using namespace lndlab;
  std::vector<CorpusEntry> entries = run_corpus(args.dir, args.seed);
  if (entries.empty()) throw Error("no .lnd files in " + args.dir);
  int code = 0;
  for (const auto& e : entries) {
    if (args.update) {
      std::filesystem::create_directories(std::filesystem::path(args.dir) / "golden");
      std::ofstream(std::filesystem::path(args.dir) / "golden" / (e.name + ".json"), std::ios::binary) << e.json;
    }
    bool drift = !args.update && !e.matches_golden();
    int c = drift ? 1 : e.report.exit_code();
    if (c == 1 || (c == 2 && code == 0)) code = c;
    if (!args.json) {
      std::cout << e.name << ": "
                << (args.update ? "golden written" : !e.golden ? "NO GOLDEN" : drift ? "DRIFT" : "golden match")
                << ", exit " << e.report.exit_code() << "\n";
    }
  }
  if (args.json) std::cout << corpus_json(entries, args.seed);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lndlab: exact analysis of locally nilpotent derivations"};
  app.require_subcommand(1);
  Args args;
  app.add_option("--seed", args.seed, "seed for hyperplanes and sample points")->default_val(0);
  app.add_flag("--json", args.json, "emit JSON instead of text");
  app.add_option("--max-degree", args.max_degree, "Groebner basis degree guardrail");
  app.add_option("--nilpotency-bound", args.nilpotency_bound, "steps allowed before nilpotency is bounded");

  struct Command {
    const char* name;
    const char* help;
    lndlab::Stage stage;
  };
  const Command commands[] = {
      {"check", "nilpotency, irreducibility, kernel, slice and plinth checks", lndlab::Stage::kCheck},
      {"chain", "modification chains over the plinth primes", lndlab::Stage::kChain},
      {"ladder", "ladder profiles of the chains", lndlab::Stage::kLadder},
      {"fiber", "fibers of the quotient map", lndlab::Stage::kFiber},
      {"verdict", "triviality verdict", lndlab::Stage::kVerdict},
  };
  std::optional<lndlab::Stage> chosen;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("spec", args.spec_path, "derivation spec file")->required();
    if (c.stage == lndlab::Stage::kChain) sub->add_option("--prime", args.prime, "only this plinth prime");
    if (c.stage == lndlab::Stage::kFiber) sub->add_option("--point", args.point, "fiber over k=v,... only");
    sub->callback([&chosen, stage = c.stage] { chosen = stage; });
  }
  CLI::App* corpus = app.add_subcommand("corpus", "run the corpus and compare with golden JSON");
  corpus->fallthrough();
  corpus->add_option("--dir", args.dir, "corpus directory");
  corpus->add_flag("--update", args.update, "rewrite the golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (args.max_degree > 0) lndlab::default_gb_limits().max_degree = args.max_degree;
  try {
    if (chosen) return run_spec(args, *chosen);
    return run_corpus_command(args);
  } catch (const lndlab::ParseError& e) {
    std::cerr << "lndlab: " << e.what() << "\n";
    return kInputError;
  } catch (const lndlab::GuardrailExceeded& e) {
    std::cerr << "lndlab: " << e.what() << "\n";
    return 2;
  } catch (const lndlab::InvariantViolation& e) {
    std::cerr << "lndlab: " << e.what() << "\n";
    return 1;
  } catch (const lndlab::Error& e) {
    std::cerr << "lndlab: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "lndlab: " << e.what() << "\n";
    return kInputError;
  }
}
