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

#include "lndlab/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lndlab/pipeline.hpp"

namespace lndlab {

std::vector<CorpusEntry> run_corpus(const std::string& dir, std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".lnd") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  PipelineOptions options;
  options.stages = {Stage::kCheck, Stage::kChain, Stage::kLadder, Stage::kFiber, Stage::kVerdict};
  options.seed = seed;
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    DerivationSpec spec = parse_spec(f.string());
    CorpusEntry entry{spec.name, f.string(), run_pipeline(spec, options), "", std::nullopt};
    entry.json = emit_json(entry.report);
    fs::path golden = fs::path(dir) / "golden" / (spec.name + ".json");
    if (fs::exists(golden)) {
      std::ifstream in(golden, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      entry.golden = ss.str();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string corpus_json(const std::vector<CorpusEntry>& entries, std::uint64_t seed) {
  Json specs = Json::object();
  for (const auto& e : entries) specs[e.name] = to_json(e.report);
  Json doc = {{"schema_version", kSchemaVersion}, {"seed", seed}, {"specs", specs}};
  return doc.dump(2) + "\n";
}

}  // namespace lndlab
