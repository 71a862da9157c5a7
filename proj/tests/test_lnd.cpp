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
#include "lndlab/lnd.hpp"
#include "lndlab/poly_text.hpp"

using namespace lndlab;

namespace {

struct Ex41 {
  Ring r = RingContext::make({"x", "y", "z"});
  Polynomial P(const std::string& s) const { return parse_polynomial(s, r); }
  Derivation d{r, {{"y", P("-2*z")}, {"z", P("x^2")}}};
};

}  // namespace

TEST_CASE("derivation applies the Leibniz rule") {
  Ex41 e;
  CHECK(e.d.apply(e.P("x^2*y + z^2")).is_zero());
  CHECK(e.d.apply(e.P("y*z")) == e.P("-2*z^2 + x^2*y"));
  CHECK(e.d.image("x").is_zero());
  CHECK(!e.d.is_zero());
}

TEST_CASE("nilpotency degrees") {
  Ex41 e;
  NilpotencyResult n = local_nilpotency_check(e.d, 16);
  CHECK(n.locally_nilpotent);
  CHECK(n.degrees == std::vector<unsigned>{1, 3, 2});
  CHECK(nilpotency_degree(e.d, e.P("y^2"), 16) == std::optional<unsigned>(5));
  CHECK(!nilpotency_degree(e.d, e.P("y"), 2));

  Ring r = RingContext::make({"x", "y"});
  Derivation not_lnd(r, {{"x", parse_polynomial("x", r)}});
  CHECK(!local_nilpotency_check(not_lnd, 8).locally_nilpotent);
}

TEST_CASE("irreducibility") {
  Ex41 e;
  CHECK(irreducibility_check(e.d).irreducible);
  IrreducibilityResult red = irreducibility_check(e.d.scaled(e.P("x")));
  CHECK(!red.irreducible);
  CHECK(red.common_factor.monic() == e.P("x"));
  CHECK_THROWS_AS(irreducibility_check(Derivation(e.r, {})), Error);
}

TEST_CASE("derivation on a quotient must preserve the relations") {
  Ring r = RingContext::make({"u", "v", "w"});
  Ideal rel({parse_polynomial("u*v - w^2", r)});
  // delta(u) = 0, delta(w) = u, delta(v) = 2w kills u*v - w^2.
  Derivation ok(r, {{"w", parse_polynomial("u", r)}, {"v", parse_polynomial("2*w", r)}}, rel);
  CHECK(ok.apply(parse_polynomial("u*v", r)) == ok.reduce(parse_polynomial("2*u*w", r)));
  CHECK_THROWS_AS(Derivation(r, {{"w", parse_polynomial("u", r)}}, rel), InvariantViolation);
}

TEST_CASE("Dixmier projection of y") {
  Ex41 e;
  LocalSlice s{e.P("z"), e.P("x^2")};
  validate_slice(e.d, s);
  LocalizedElement pi = dixmier_projection(e.d, s, e.P("y"), 16);
  CHECK(pi.numerator == e.P("x^2*y + z^2"));
  CHECK(pi.base == e.P("x^2"));
  CHECK(pi.exponent == 1);
  CHECK(e.d.apply(pi.numerator).is_zero());
  CHECK(dixmier_projection(e.d, s, e.P("z"), 16).numerator.is_zero());
  CHECK_THROWS_AS(validate_slice(e.d, LocalSlice{e.P("y"), e.P("-2*z")}), InvariantViolation);
}

TEST_CASE("preimages and the plinth claim") {
  Ex41 e;
  PreimageResult p = derivation_preimage(e.d, e.P("x^2"), 4);
  REQUIRE(p.solution);
  CHECK(e.d.apply(*p.solution) == e.P("x^2"));
  PreimageResult none = derivation_preimage(e.d, e.P("x"), 6);
  CHECK(!none.solution);
  CHECK(none.cap == 6);

  PlinthClaim claim{e.P("x^2"), e.P("z"), {{"X", e.P("x"), 2}}};
  PlinthReport rep = plinth_witness_check(e.d, claim, 6);
  CHECK(rep.passed());
  REQUIRE(rep.minimality.size() == 1);
  CHECK(rep.minimality[0].no_preimage);
  PlinthClaim bad{e.P("x^2"), e.P("z"), {{"X", e.P("x"), 3}}};
  CHECK_THROWS_AS(plinth_witness_check(e.d, bad, 6), Error);
  PlinthClaim wrong{e.P("x^2"), e.P("y"), {{"X", e.P("x"), 2}}};
  CHECK(!plinth_witness_check(e.d, wrong, 2).witness_ok);
}

TEST_CASE("fixed points") {
  Ex41 e;
  Ideal fl = fixed_locus_ideal(e.d);
  CHECK(fl.equals(Ideal({e.P("z"), e.P("x^2")})));
  CHECK(fixed_point_free_check(e.d, e.P("1 + x"), e.P("x")).fixed_point_free);
  CHECK(fixed_point_free_check(e.d, e.P("z"), e.P("1")).fixed_point_free);
  FixedPointReport f = fixed_point_free_check(e.d, e.P("2*z"), e.P("x"));
  CHECK(!f.fixed_point_free);
  CHECK(Ideal(f.locus).equals(Ideal({e.P("x"), e.P("z")})));

  Ring r = RingContext::make({"x", "z"});
  Derivation slice(r, {{"z", parse_polynomial("1", r)}});
  CHECK(fixed_locus_ideal(slice).is_unit());
}
