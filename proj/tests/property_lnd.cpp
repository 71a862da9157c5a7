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
#include "lndlab/lnd.hpp"
#include "random_poly.hpp"

using namespace lndlab;
using lndlab::testing::kCases;
using lndlab::testing::random_coefficient;
using lndlab::testing::random_nonzero;
using lndlab::testing::random_polynomial;

namespace {

// Triangular derivation: delta(x) = 0, delta(y) = c x^k, delta(z) = h(x, y).
Derivation triangular(std::mt19937_64& rng, const Ring& r, unsigned k) {
  Ring xy = RingContext::make({"x", "y"});
  Polynomial h = embed(random_polynomial(rng, xy, 2, 3), r);
  Polynomial a = random_coefficient(rng) * pow(Polynomial::variable(r, "x"), k);
  return Derivation(r, {{"y", a}, {"z", h}});
}

}  // namespace

TEST_CASE("property: Leibniz rule and the chain rule formula") {
  std::mt19937_64 rng(505);
  Ring r = RingContext::make({"x", "y", "z"});
  for (int c = 0; c < kCases; ++c) {
    std::map<std::string, Polynomial> images;
    for (const auto& v : r->names()) images.emplace(v, random_polynomial(rng, r, 2, 2));
    Derivation d(r, images);
    Polynomial p = random_polynomial(rng, r, 3, 3);
    Polynomial q = random_polynomial(rng, r, 3, 3);
    Polynomial chain(r);
    for (std::size_t i = 0; i < r->size(); ++i) chain += partial_derivative(p, i) * d.image(i);
    CAPTURE(c);
    CHECK(d.apply(p) == chain);
    CHECK(d.apply(p * q) == p * d.apply(q) + q * d.apply(p));
    CHECK(d.apply(p + q) == d.apply(p) + d.apply(q));
    CHECK(d.apply(Polynomial(r, random_coefficient(rng))).is_zero());
  }
}

TEST_CASE("property: Dixmier projections lie in the kernel") {
  std::mt19937_64 rng(606);
  Ring r = RingContext::make({"x", "y", "z"});
  for (int c = 0; c < kCases; ++c) {
    unsigned k = c % 3;
    Derivation d = triangular(rng, r, k);
    REQUIRE(local_nilpotency_check(d, 16).locally_nilpotent);
    LocalSlice slice{Polynomial::variable(r, "y"), d.image("y")};
    Polynomial b = random_nonzero(rng, r, 3, 3);
    LocalizedElement pi = dixmier_projection(d, slice, b, 32);
    CAPTURE(c);
    CHECK(d.apply(pi.numerator).is_zero());
    CHECK(dixmier_projection(d, slice, slice.z, 32).numerator.is_zero());
    Polynomial x = Polynomial::variable(r, "x");
    LocalizedElement px = dixmier_projection(d, slice, x, 32);
    CHECK(px.numerator == x);
    CHECK(px.exponent == 0);
  }
}
