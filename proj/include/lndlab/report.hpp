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

#ifndef LNDLAB_REPORT_HPP
#define LNDLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lndlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Verdict { kPass, kFail, kBounded, kInconclusive };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct CheckResult {
  std::string id;
  /// The statement the check exercises.
  std::string anchor;
  Verdict verdict = Verdict::kPass;
  std::string summary;

  bool operator==(const CheckResult&) const = default;
};

struct AnalysisReport {
  int schema_version = kSchemaVersion;
  std::string spec;
  std::uint64_t seed = 0;
  std::vector<std::string> stages;
  std::vector<CheckResult> checks;
  /// Per-stage details, keyed by section name, in insertion order.
  Json sections = Json::object();

  void add(std::string id, std::string anchor, Verdict verdict, std::string summary);
  /// 0 all pass, 1 any failure, 2 only bounded or inconclusive results besides passes.
  int exit_code() const;

  bool operator==(const AnalysisReport&) const = default;
};

Json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& json);

/// Pretty-printed JSON with a trailing newline; stable for a fixed report.
std::string emit_json(const AnalysisReport& report);
std::string emit_text(const AnalysisReport& report);

}  // namespace lndlab

#endif  // LNDLAB_REPORT_HPP
