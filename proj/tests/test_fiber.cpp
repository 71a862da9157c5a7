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

#include "doctest.h"
#include "lndlab/fiber.hpp"
#include "lndlab/poly_text.hpp"
#include "lndlab/spec_file.hpp"

using namespace lndlab;

namespace {

DerivationSpec corpus(const std::string& name) {
  return parse_spec(std::string(LNDLAB_SOURCE_DIR) + "/corpus/" + name + ".lnd");
}

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("fibers of x^2 d/dz - 2z d/dy over (X, T)") {
  DerivationSpec s = corpus("ex4_1");
  FiberSetup setup = s.fiber_setup();
  const Ring& r = s.ring;

  // Oracle: over (0, 1) the fiber ideal is the intersection of two lines.
  Ideal two_lines = ideal_intersection(Ideal({P("x", r), P("z - 1", r)}), Ideal({P("x", r), P("z + 1", r)}));
  CHECK(Ideal({P("x", r), P("x^2*y + z^2 - 1", r)}).equals(two_lines));
  FiberReport a = fiber_at_point(setup, {{"X", 0}, {"T", 1}}, 0);
  CHECK(a.method == FiberMethod::kTriangular);
  CHECK(a.components == 2);
  CHECK(a.multiplicities == std::vector<unsigned>{1, 1});

  // Oracle: over (0, 0) the fiber is (x, z^2), a double line of length 2 on each slice y = c.
  Ideal dbl({P("x", r), P("z^2", r)});
  CHECK(zero_dim_degree(dbl.plus({P("y - 5", r)})) == std::optional<std::size_t>(2));
  FiberReport b = fiber_at_point(setup, {{"X", 0}, {"T", 0}}, 0);
  CHECK(b.components == 1);
  CHECK(b.multiplicities == std::vector<unsigned>{2});
  CHECK(!b.single_line());

  FiberReport c = fiber_at_point(setup, {{"X", 3}, {"T", -2}}, 0);
  CHECK(c.single_line());
  CHECK_THROWS(fiber_at_point(setup, {{"X", 0}}, 0));
  CHECK_THROWS(fiber_at_point(setup, {{"X", 0}, {"T", 1}, {"Q", 2}}, 0));
}

TEST_CASE("fiber reports do not depend on the run") {
  DerivationSpec s = corpus("ex4_1");
  FiberReport a = fiber_at_point(s.fiber_setup(), {{"X", 0}, {"T", 1}}, 7);
  FiberReport b = fiber_at_point(s.fiber_setup(), {{"X", 0}, {"T", 1}}, 7);
  CHECK(a.seed_degrees == b.seed_degrees);
  CHECK(a.factors == b.factors);
}

TEST_CASE("sample points respect the constraints") {
  Ring tags = RingContext::make({"X", "T"});
  auto pts = sample_points(tags, {P("X", tags)}, P("T", tags), 5, 3);
  CHECK(pts.size() == 5);
  for (const auto& p : pts) {
    CHECK(p.at("X") == 0);
    CHECK(p.at("T") != 0);
  }
  CHECK(sample_points(tags, {P("X", tags)}, P("T", tags), 5, 3) == pts);
}

TEST_CASE("generic fibers and the triviality verdict") {
  DerivationSpec s = corpus("ex4_1");
  Ring tags = RingContext::make({"X", "T"});
  GenericFiberReport g = generic_fiber_check(s.fiber_setup(), P("X^2", tags), 3, 0);
  CHECK(g.samples.size() == 3);
  CHECK(g.all_single_lines());

  FiberReport two = fiber_at_point(s.fiber_setup(), {{"X", 0}, {"T", 1}}, 0);
  TrivialityVerdict v = triviality_verdict(std::nullopt, {two});
  CHECK(v.verdict == Triviality::kNotTrivial);
  CHECK(v.witness == std::optional<std::size_t>(0));
  CHECK(triviality_verdict(P("z", s.ring), {}).verdict == Triviality::kTrivialBundle);
  CHECK(triviality_verdict(std::nullopt, g.samples).verdict == Triviality::kInconclusive);
}

TEST_CASE("fixed locus radical") {
  DerivationSpec s = corpus("ex4_1");
  CHECK(fixed_locus_radical_check(s.derivation, {P("x", s.ring), P("z", s.ring)}));
  CHECK(!fixed_locus_radical_check(s.derivation, {P("x", s.ring)}));
  Ring tags = RingContext::make({"X", "T"});
  Polynomial reduced = reduce_mod_prime(P("X*T + T^2 + X - 4", tags), P("X", tags));
  CHECK(reduced.str() == "T^2 - 4");
  CHECK(!reduced.ring()->contains("X"));
}
