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

#include "lndlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "lndlab/error.hpp"

namespace lndlab {

namespace {

const char* const kMetaKeys[] = {"schema_version", "spec", "seed", "stages", "checks"};

bool is_meta(const std::string& key) {
  return std::find(std::begin(kMetaKeys), std::end(kMetaKeys), key) != std::end(kMetaKeys);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kBounded:
      return "bounded";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "";
}

Verdict verdict_from_name(const std::string& name) {
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kBounded, Verdict::kInconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  throw Error("unknown verdict '" + name + "'");
}

void AnalysisReport::add(std::string id, std::string anchor, Verdict verdict, std::string summary) {
  checks.push_back({std::move(id), std::move(anchor), verdict, std::move(summary)});
}

int AnalysisReport::exit_code() const {
  bool weak = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::kFail) return 1;
    if (c.verdict != Verdict::kPass) weak = true;
  }
  return weak ? 2 : 0;
}

Json to_json(const AnalysisReport& report) {
  Json j = Json::object();
  j["schema_version"] = report.schema_version;
  j["spec"] = report.spec;
  j["seed"] = report.seed;
  j["stages"] = report.stages;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"verdict", verdict_name(c.verdict)}, {"summary", c.summary}});
  }
  j["checks"] = std::move(checks);
  for (const auto& [key, value] : report.sections.items()) j[key] = value;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw Error("unsupported schema_version " + std::to_string(r.schema_version));
  }
  r.spec = j.at("spec").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.stages = j.at("stages").get<std::vector<std::string>>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                        verdict_from_name(c.at("verdict").get<std::string>()), c.at("summary").get<std::string>()});
  }
  for (const auto& [key, value] : j.items()) {
    if (!is_meta(key)) r.sections[key] = value;
  }
  return r;
}

std::string emit_json(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

std::string emit_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "lndlab report for " << report.spec << " (seed " << report.seed << ", schema " << report.schema_version
      << ")\n";
  out << "stages:";
  for (const auto& s : report.stages) out << " " << s;
  out << "\n\n";
  for (const auto& c : report.checks) {
    std::string tag = verdict_name(c.verdict);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    out << "  " << tag << std::string(14 - std::min<std::size_t>(tag.size(), 13), ' ') << c.id << "\n";
    out << "                " << c.summary << "\n";
    out << "                [" << c.anchor << "]\n";
  }
  if (!report.sections.empty()) out << "\n";
  for (const auto& [key, value] : report.sections.items()) out << key << ": " << value.dump() << "\n";
  out << "\nexit status " << report.exit_code() << "\n";
  return out.str();
}

}  // namespace lndlab
