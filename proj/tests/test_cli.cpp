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

#include <sys/wait.h>

#include <cstdlib>

#include "doctest.h"
#include "lndlab/error.hpp"
#include "lndlab/pipeline.hpp"
#include "lndlab/poly_text.hpp"

using namespace lndlab;

namespace {

std::string src(const std::string& rel) { return std::string(LNDLAB_SOURCE_DIR) + "/" + rel; }

int cli(const std::string& args) {
  std::string cmd = std::string(LNDLAB_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kMinimal = R"([ring]
x z
[derivation]
z -> x
[kernel]
X = x
)";

}  // namespace

TEST_CASE("spec files parse into a validated derivation") {
  DerivationSpec s = parse_spec(src("corpus/ex4_1.lnd"));
  CHECK(s.name == "ex4_1");
  CHECK(s.ring->names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.derivation.image("y") == parse_polynomial("-2*z", s.ring));
  REQUIRE(s.kernel.size() == 2);
  CHECK(s.kernel[1].value == parse_polynomial("x^2*y + z^2", s.ring));
  REQUIRE(s.plinth);
  CHECK(s.plinth->primes.at(0).exponent == 2);
  CHECK(s.points.size() == 2);
  CHECK(s.subalgebra_generators().size() == 3);

  DerivationSpec m = parse_spec_text(kMinimal, "minimal");
  CHECK(!m.slice);
  CHECK(!m.plinth);
}

TEST_CASE("spec errors carry positions") {
  CHECK_THROWS_AS(parse_spec(src("tests/data/bad_kernel.lnd")), ParseError);
  try {
    parse_spec(src("tests/data/undeclared.lnd"));
    FAIL("expected an error");
  } catch (const UndeclaredVariable& e) {
    CHECK(e.name() == "w");
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_spec_text("[ring]\nx\n[nonsense]\n", "bad"), ParseError);
  CHECK_THROWS_AS(parse_spec_text("[ring]\nx x\n", "dup"), ParseError);
  CHECK_THROWS_AS(parse_spec_text("[ring]\nx z\n[derivation]\nz -> x\n[slice]\nZ = x\n", "s"), ParseError);
  CHECK_THROWS_AS(parse_spec("/nonexistent/none.lnd"), Error);
}

TEST_CASE("points") {
  Point p = parse_point("A=1, B=-2/3");
  CHECK(p.at("A") == 1);
  CHECK(p.at("B") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_point("A=1,A=2"), ParseError);
  CHECK_THROWS_AS(parse_point("A"), ParseError);
}

TEST_CASE("reports round-trip through JSON") {
  DerivationSpec s = parse_spec(src("corpus/ex4_1.lnd"));
  PipelineOptions o;
  o.stages = {Stage::kVerdict};
  AnalysisReport r = run_pipeline(s, o);
  Json j = Json::parse(emit_json(r));
  AnalysisReport back = report_from_json(j);
  CHECK(back == r);
  CHECK(emit_json(back) == emit_json(r));
  CHECK(j["plinth"]["generator"] == "x^2");
  CHECK(j["plinth"]["verified"] == true);
  CHECK(j["verdict"]["verdict"] == "not-trivial");
}

TEST_CASE("empty stage list gives metadata only") {
  DerivationSpec s = parse_spec(src("corpus/ex4_1.lnd"));
  AnalysisReport r = run_pipeline(s, PipelineOptions{});
  CHECK(r.checks.empty());
  CHECK(r.sections.empty());
  CHECK(r.exit_code() == 0);
  Json j = Json::parse(emit_json(r));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["spec"] == "ex4_1");
}

TEST_CASE("stages pull in their prerequisites") {
  DerivationSpec s = parse_spec(src("corpus/ex4_1.lnd"));
  PipelineOptions o;
  o.stages = {Stage::kLadder};
  AnalysisReport r = run_pipeline(s, o);
  CHECK(r.stages == std::vector<std::string>{"check", "chain", "ladder"});
  CHECK(r.sections["ladder"]["X"]["gbar_degree"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(cli("check " + src("tests/data/slice_control.lnd")) == 0);
  CHECK(cli("check " + src("tests/data/reducible_control.lnd")) == 1);
  CHECK(cli("check " + src("corpus/ex4_1.lnd")) == 2);
  CHECK(cli("check " + src("tests/data/bad_kernel.lnd")) == 3);
  CHECK(cli("check " + src("tests/data/undeclared.lnd")) == 3);
  CHECK(cli("check /nonexistent.lnd") == 3);
  CHECK(cli("chain " + src("corpus/ex4_1.lnd") + " --prime Q") == 3);
  CHECK(cli("fiber " + src("corpus/ex4_1.lnd") + " --point Q=1") == 3);
  CHECK(cli("frobnicate") == 3);
  CHECK(cli("--help") == 0);
}
