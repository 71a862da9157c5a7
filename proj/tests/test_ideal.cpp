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
#include "lndlab/groebner.hpp"
#include "lndlab/ideal.hpp"
#include "lndlab/poly_text.hpp"

using namespace lndlab;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(std::initializer_list<const char*> ss, const Ring& r) {
  std::vector<Polynomial> out;
  for (const char* s : ss) out.push_back(P(s, r));
  return out;
}

}  // namespace

TEST_CASE("reduced basis of the twisted cubic") {
  Ring r = RingContext::make({"x", "y", "z"}, MonomialOrder::lex());
  Ideal I(Ps({"y - x^2", "z - x^3"}, r));
  const auto& gb = I.groebner();
  CHECK(is_groebner_basis(gb, r->order()));
  CHECK(I.contains(P("y^3 - z^2", r)));
  CHECK(I.contains(P("x*y - z", r)));
  CHECK(!I.contains(P("x - y", r)));
  for (const auto& g : gb) CHECK(g.leading().coefficient == 1);
}

TEST_CASE("unit and zero ideals") {
  Ring r = RingContext::make({"x", "y"});
  CHECK(Ideal(Ps({"x", "x + 1"}, r)).is_unit());
  CHECK(Ideal(r).is_zero());
  CHECK(Ideal(Ps({"x*y", "x^2"}, r)).equals(Ideal(Ps({"x^2", "x*y", "x^3 + x*y"}, r))));
}

TEST_CASE("elimination recovers the implicit equation") {
  Ring r = RingContext::make({"t", "x", "y"});
  Ideal I(Ps({"x - t^2", "y - t^3"}, r));
  Ideal E = elimination_ideal(I, {"x", "y"});
  REQUIRE(E.groebner().size() == 1);
  CHECK(E.groebner()[0] == P("x^3 - y^2", E.ring()).monic());
}

TEST_CASE("intersection of monomial ideals is the lcm ideal") {
  Ring r = RingContext::make({"x", "y"});
  Ideal J = ideal_intersection(Ideal(Ps({"x^2", "y"}, r)), Ideal(Ps({"x", "y^3"}, r)));
  CHECK(J.equals(Ideal(Ps({"x^2", "x*y", "y^3"}, r))));
}

TEST_CASE("saturation strips the embedded component") {
  Ring r = RingContext::make({"x", "y"});
  Ideal I(Ps({"x^2", "x*y"}, r));
  CHECK(saturation(I, P("y", r)).equals(Ideal(Ps({"x"}, r))));
  CHECK(saturation(I, P("x", r)).is_unit());
}

TEST_CASE("radical membership") {
  Ring r = RingContext::make({"x", "y"});
  Ideal I(Ps({"x^3", "y^2"}, r));
  CHECK(radical_contains(I, P("x + y", r)));
  CHECK(!radical_contains(I, P("x + 1", r)));
}

TEST_CASE("gcd and lcm of multivariate polynomials") {
  Ring r = RingContext::make({"x", "y"});
  Polynomial a = P("(x + y)^2*(x - 1)", r);
  Polynomial b = P("(x + y)*(y + 2)", r);
  CHECK(multivariate_gcd(a, b).monic() == P("x + y", r));
  CHECK((multivariate_lcm(a, b) * multivariate_gcd(a, b)).monic() == (a * b).monic());
}

TEST_CASE("dimension and degree") {
  Ring r = RingContext::make({"x", "y", "z"});
  CHECK(krull_dimension(Ideal(Ps({"x*y", "z"}, r))) == 1);
  CHECK(krull_dimension(Ideal(r)) == 3);
  CHECK(zero_dim_degree(Ideal(Ps({"x^2 - 1", "y^3", "z - x"}, r))) == std::optional<std::size_t>(6));
  CHECK(!zero_dim_degree(Ideal(Ps({"x^2"}, r))));
}

TEST_CASE("division modulo relations") {
  Ring r = RingContext::make({"x", "y"});
  Ideal rel(Ps({"x*y - 1"}, r));
  auto q = divide_modulo(P("1", r), P("x", r), rel);
  REQUIRE(q);
  CHECK(rel.contains(P("x", r) * *q - P("1", r)));
  CHECK(!divide_modulo(P("1", r), P("x - 1", r), rel));
}

TEST_CASE("subalgebra membership and contraction on k[x, x^2 y + z^2, z]") {
  Ring r = RingContext::make({"x", "y", "z"});
  std::vector<TaggedGenerator> gens{{"X", P("x", r)}, {"T", P("x^2*y + z^2", r)}, {"Z", P("z", r)}};
  Subalgebra A(Ideal(r), gens);
  auto m = A.member(P("x^2*y", r));
  REQUIRE(m);
  CHECK(*m == P("T - Z^2", A.tags()));
  CHECK(!A.member(P("y", r)));
  // syzygies of algebraically independent generators
  CHECK(A.contract(Polynomial(A.tags()), 1).is_zero());
  Ideal I1 = A.contract(P("X", A.tags()), 1);
  CHECK(I1.equals(Ideal(Ps({"X", "Z^2 - T"}, A.tags()))));
  Ideal I2 = A.contract(P("X", A.tags()), 2);
  CHECK(I2.equals(Ideal(Ps({"X^2", "Z^2 - T"}, A.tags()))));
  CHECK_THROWS_AS(Subalgebra(Ideal(r), {{"x", P("x", r)}}), Error);
}
