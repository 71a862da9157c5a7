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

#ifndef LNDLAB_CORPUS_HPP
#define LNDLAB_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/report.hpp"

namespace lndlab {

struct CorpusEntry {
  std::string name;
  std::string path;
  AnalysisReport report;
  /// emit_json of the report.
  std::string json;
  /// Golden file contents, when present.
  std::optional<std::string> golden;

  bool matches_golden() const { return golden && *golden == json; }
};

/// Runs every stage on each *.lnd file of `dir` (sorted by name) and loads
/// `dir`/golden/<name>.json when it exists.
std::vector<CorpusEntry> run_corpus(const std::string& dir, std::uint64_t seed);

/// One JSON document for a whole corpus run.
std::string corpus_json(const std::vector<CorpusEntry>& entries, std::uint64_t seed);

}  // namespace lndlab

#endif  // LNDLAB_CORPUS_HPP
