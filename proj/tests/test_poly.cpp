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
#include "lndlab/poly_text.hpp"
#include "lndlab/polynomial.hpp"

using namespace lndlab;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("rationals normalize") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(6) == 720);
}

TEST_CASE("grevlex and lex orders on three variables") {
  Ring r = RingContext::make({"x", "y", "z"});
  // degree 3 under grevlex: x^2*y > y^3 > x*z^2
  Polynomial p = P("x*z^2 + x^2*y + y^3", r);
  CHECK(p.str() == "x^2*y + y^3 + x*z^2");
  Ring l = RingContext::make({"x", "y", "z"}, MonomialOrder::lex());
  CHECK(P("z^5 + x*y + y^2", l).str() == "x*y + y^2 + z^5");
}

TEST_CASE("printing round-trips through the parser") {
  Ring r = RingContext::make({"x", "y", "z"});
  for (const char* s : {"0", "1", "-1/2*z^2 + x^2*y", "x^3 - 3*x*y*z + 7/3", "-x"}) {
    Polynomial p = P(s, r);
    CHECK(P(p.str(), r) == p);
  }
}

TEST_CASE("arithmetic identities") {
  Ring r = RingContext::make({"x", "y"});
  Polynomial a = P("x + y", r);
  Polynomial b = P("x - y", r);
  CHECK(a * b == P("x^2 - y^2", r));
  CHECK(pow(a, 3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", r));
  CHECK(exact_div(P("x^2 - y^2", r), a) == b);
  CHECK_THROWS_AS(exact_div(P("x^2 + y^2", r), a), InexactDivision);
  CHECK(!divides(a, P("x^2 + 1", r)));
  CHECK(partial_derivative(P("x^3*y + y^2", r), "y") == P("x^3 + 2*y", r));
  CHECK(P("4*x + 6", r).primitive() == P("2*x + 3", r));
  CHECK(P("4*x + 6", r).monic() == P("x + 3/2", r));
}

TEST_CASE("substitution and embedding") {
  Ring r = RingContext::make({"x", "y"});
  Ring s = RingContext::make({"t"});
  Polynomial p = P("x^2*y - 1", r);
  Polynomial q = substitute(p, {{"x", P("t", s)}, {"y", P("t + 1", s)}}, s);
  CHECK(q == P("t^3 + t^2 - 1", s));
  Ring big = RingContext::make({"w", "x", "y"});
  CHECK(embed(p, big) == P("x^2*y - 1", big));
  auto cs = coefficients_in(P("x^2*y + x*y^2 + 3", r), 0);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == P("3", r));
  CHECK(cs[1] == P("y^2", r));
  CHECK(cs[2] == P("y", r));
}

TEST_CASE("ring mismatch and parse errors") {
  Ring r = RingContext::make({"x", "y"});
  Ring s = RingContext::make({"x", "z"});
  CHECK_THROWS_AS(P("x", r) + P("x", s), RingMismatch);
  CHECK_THROWS_AS(P("x +* y", r), ParseError);
  try {
    P("x + w", r);
    FAIL("expected an error");
  } catch (const UndeclaredVariable& e) {
    CHECK(e.name() == "w");
    CHECK(e.column() == 5);
  }
}
