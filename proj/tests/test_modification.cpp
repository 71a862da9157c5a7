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
#include "lndlab/error.hpp"
#include "lndlab/modification.hpp"
#include "lndlab/poly_text.hpp"

using namespace lndlab;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

struct Ex41 {
  Ring r = RingContext::make({"x", "y", "z"});
  Derivation d{r, {{"y", P("-2*z", r)}, {"z", P("x^2", r)}}};
  std::vector<TaggedGenerator> gens{{"X", P("x", r)}, {"T", P("x^2*y + z^2", r)}, {"Z", P("z", r)}};
  ModificationChain chain = chain_build(d, gens, "X", P("X", tag_ring(gens)), 6);
};

// delta_B(incl(v)) == incl(delta_i(v)) for every stage variable v.
bool commutes(const ModificationChain& chain, const ChainStage& st, const Derivation& target) {
  for (const auto& name : st.derivation.ring()->names()) {
    Polynomial lhs = target.apply(st.inclusion.at(name));
    Polynomial rhs = substitute(st.derivation.image(name), st.inclusion, chain.target.ambient);
    if (!target.reduce(lhs - rhs).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("affine modification k[x, y][y/x]") {
  Ring r = RingContext::make({"x", "y"});
  Modification m = affine_modification(PresentedAlgebra::polynomial_ring(r), P("x", r), {P("x", r), P("y", r)});
  REQUIRE(m.new_variables.size() == 1);
  const Ring& a = m.algebra.ambient;
  CHECK(m.algebra.relations.equals(Ideal({P("x*" + m.new_variables[0] + " - y", a)})));
  CHECK_THROWS_AS(affine_modification(PresentedAlgebra::polynomial_ring(r), P("x", r), {P("y", r)}), Error);
  CHECK_THROWS_AS(affine_modification(PresentedAlgebra::polynomial_ring(r), Polynomial(r), {P("y", r)}), Error);
}

TEST_CASE("lifted derivation divides by f") {
  Ring r = RingContext::make({"x", "y"});
  Derivation d(r, {{"y", P("x", r)}});
  Modification m = affine_modification(PresentedAlgebra::polynomial_ring(r), P("x", r), {P("x", r), P("y", r)});
  Derivation lifted = lift_derivation(d, m);
  CHECK(lifted.image(m.new_variables[0]) == Polynomial(m.algebra.ambient, Rational(1)));
  Derivation moves_f(r, {{"x", P("1", r)}});
  CHECK_THROWS_AS(lift_derivation(moves_f, m), InvariantViolation);
}

TEST_CASE("chain over x for k[x, y, z] with delta = x^2 d/dz - 2z d/dy") {
  Ex41 e;
  const Ring& tags = e.chain.base.ambient;
  REQUIRE(e.chain.stages.size() >= 2);
  CHECK(e.chain.stages[0].contraction.equals(Ideal({P("X", tags), P("Z^2 - T", tags)})));
  CHECK(e.chain.stages[1].contraction.equals(Ideal({P("X^2", tags), P("Z^2 - T", tags)})));
  CHECK(e.chain.stabilized_at == std::optional<unsigned>(2));
  for (const auto& st : e.chain.stages) {
    CHECK(st.contains_previous);
    CHECK(commutes(e.chain, st, e.d));
  }
  for (const auto& g : generation_identity_check(e.chain)) CHECK(g.holds);
  CHECK(kernel_stability_check(e.chain, {"X", "T"}));
  CHECK(endpoint_generator(e.chain).has_value());

  const ChainStage& last = e.chain.stages[1];
  std::map<std::string, Polynomial> map;
  for (const auto& [v, img] : last.inclusion) map.emplace(v, img);
  CHECK(presentation_check(e.chain, last, map).holds());
  // Y with Y |-> -y generates B together with the base.
  bool has_minus_y = false;
  for (const auto& y : last.modification.new_variables) has_minus_y |= last.inclusion.at(y) == P("-y", e.r);
  CHECK(has_minus_y);
}

TEST_CASE("terminal multiplier") {
  Ex41 e;
  Subalgebra base(Ideal(e.r), e.gens);
  std::vector<TaggedGenerator> vars{{"x", P("x", e.r)}, {"y", P("y", e.r)}, {"z", P("z", e.r)}};
  CHECK(terminal_check(base, vars, P("x^2", e.r)).terminal());
  CHECK(!terminal_check(base, vars, P("x", e.r)).terminal());
}

TEST_CASE("ladder profile") {
  Ex41 e;
  LadderProfile lp = ladder_profile(e.chain, "Z", 2);
  CHECK(lp.gbar_degree == 2);
  CHECK(lp.monotone());
  CHECK(lp.breakpoint_bound());
  CHECK(lp.q1 >= 0);
  Polynomial gbar = lp.gbar.monic();
  CHECK(gbar == P("Z^2 - T", gbar.ring()).monic());
}
