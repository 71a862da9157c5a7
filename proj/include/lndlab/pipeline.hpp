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

#ifndef LNDLAB_PIPELINE_HPP
#define LNDLAB_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "lndlab/report.hpp"
#include "lndlab/spec_file.hpp"

namespace lndlab {

enum class Stage { kCheck, kChain, kLadder, kFiber, kVerdict };

std::string stage_name(Stage stage);

struct PipelineOptions {
  std::set<Stage> stages;
  std::uint64_t seed = 0;
  /// Restricts chains and ladders to one plinth prime.
  std::optional<std::string> prime;
  /// Replaces the declared sample points.
  std::optional<Point> point;
  std::optional<unsigned> nilpotency_bound;
};

/// Runs the requested stages (and their prerequisites) in dependency order.
/// Deterministic for a fixed spec and seed. A guardrail overflow ends the
/// stage it occurred in with an inconclusive result.
AnalysisReport run_pipeline(const DerivationSpec& spec, const PipelineOptions& options);

}  // namespace lndlab

#endif  // LNDLAB_PIPELINE_HPP
