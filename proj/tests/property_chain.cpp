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
#include "lndlab/modification.hpp"
#include "lndlab/spec_file.hpp"
#include "random_poly.hpp"

using namespace lndlab;
using lndlab::testing::kCases;
using lndlab::testing::random_coefficient;

namespace {

// delta(x) = 0, delta(y) = h(x, z), delta(z) = f^p with f = x + c and
// h = lead z^e + (terms of lower z-degree). Kernel k[x, F], F = f^p y - g with
// dg/dz = h; the contractions are I_j = (f^j, g + F) for j <= p.
struct Family {
  Ring r = RingContext::make({"x", "y", "z"});
  int c = 0;
  unsigned p = 1;
  unsigned e = 1;
  Polynomial f{r}, h{r}, g{r};
  Derivation d{r, {}};
  std::vector<TaggedGenerator> gens;

  explicit Family(std::mt19937_64& rng, int index) {
    c = static_cast<int>(rng() % 7) - 3;
    p = 1 + index % 3;
    e = 1 + (index / 3) % 2;
    f = Polynomial::variable(r, "x") + Polynomial(r, Rational(c));
    std::vector<Term> ht{{Monomial::variable(2, e), random_coefficient(rng)}};
    std::vector<Term> gt;
    for (unsigned j = 0; j < e; ++j)
      for (unsigned i = 0; i <= 1; ++i)
        if (rng() % 2) ht.push_back({Monomial::variable(0, i) * Monomial::variable(2, j), random_coefficient(rng)});
    h = Polynomial(r, ht);
    for (const auto& t : h.terms()) {
      Monomial m = t.monomial * Monomial::variable(2);
      gt.push_back({m, t.coefficient / Rational(m[2])});
    }
    g = Polynomial(r, gt);
    d = Derivation(r, {{"y", h}, {"z", pow(f, p)}});
    gens = {{"X", Polynomial::variable(r, "x")},
            {"F", pow(f, p) * Polynomial::variable(r, "y") - g},
            {"Z", Polynomial::variable(r, "z")}};
  }
};

void check_ladder(const LadderProfile& lp) {
  for (std::size_t i = 1; i < lp.exponents.size(); ++i) CHECK(lp.exponents[i - 1] <= lp.exponents[i]);
  REQUIRE(!lp.breakpoints.empty());
  for (std::size_t j = 1; j <= lp.breakpoints.size(); ++j)
    if (lp.breakpoints[j - 1] > 0) CHECK(j * lp.breakpoints[0] <= lp.breakpoints[j - 1]);
  CHECK(lp.monotone());
  CHECK(lp.breakpoint_bound());
}

// I_j = (alpha^j, g_1..g_r) for j <= l, where g_k are the generators of I_1
// other than alpha and l is the last stage containing every g_k.
void check_generation(const ModificationChain& chain) {
  const Ring& tags = chain.base.ambient;
  std::vector<Polynomial> rest;
  for (const auto& g : chain.stages.front().contraction.groebner())
    if (!Ideal({chain.alpha}).contains(g)) rest.push_back(g);
  std::size_t l = 0;
  while (l < chain.stages.size() &&
         std::all_of(rest.begin(), rest.end(), [&](const Polynomial& g) { return chain.stages[l].contraction.contains(g); }))
    ++l;
  for (std::size_t j = 1; j <= l; ++j) {
    std::vector<Polynomial> gens{pow(chain.alpha, static_cast<unsigned>(j))};
    gens.insert(gens.end(), rest.begin(), rest.end());
    CHECK(chain.stages[j - 1].contraction.equals(Ideal(tags, gens)));
  }
  for (const auto& g : generation_identity_check(chain)) CHECK(g.holds);
}

}  // namespace

TEST_CASE("property: chains of the x^p family follow the closed form") {
  std::mt19937_64 rng(707);
  for (int n = 0; n < kCases; ++n) {
    Family fam(rng, n);
    Ring tags = tag_ring(fam.gens);
    Polynomial alpha = Polynomial::variable(tags, "X") + Polynomial(tags, Rational(fam.c));
    ModificationChain chain = chain_build(fam.d, fam.gens, "f", alpha, 6);
    CAPTURE(n);
    CAPTURE(fam.h.str());
    CAPTURE(fam.p);
    REQUIRE(chain.stabilized_at == std::optional<unsigned>(fam.p));
    Polynomial gF = substitute(fam.g, {{"x", Polynomial::variable(tags, "X")}, {"z", Polynomial::variable(tags, "Z")}},
                               tags) +
                    Polynomial::variable(tags, "F");
    for (unsigned j = 1; j <= fam.p; ++j)
      CHECK(chain.stages[j - 1].contraction.equals(Ideal({pow(alpha, j), gF})));
    Subalgebra last(Ideal(fam.r), stage_generators(chain, chain.stages.size()));
    CHECK(last.member(Polynomial::variable(fam.r, "y")).has_value());
    check_generation(chain);

    LadderProfile lp = ladder_profile(chain, "Z", static_cast<int>(fam.p));
    CHECK(lp.gbar_degree == static_cast<int>(fam.e + 1));
    check_ladder(lp);
  }
}

TEST_CASE("property: ladders and generation identities on the corpus chains") {
  for (const char* name : {"ex4_1", "ex4_2", "ex4_3"}) {
    DerivationSpec s = parse_spec(std::string(LNDLAB_SOURCE_DIR) + "/corpus/" + name + ".lnd");
    Subalgebra base(s.derivation.relations(), s.subalgebra_generators());
    for (const auto& prime : s.plinth->primes) {
      CAPTURE(name);
      CAPTURE(prime.name);
      auto alpha = base.member(prime.value);
      REQUIRE(alpha);
      ModificationChain chain = chain_build(s.derivation, s.subalgebra_generators(), prime.name, *alpha, 6);
      check_generation(chain);
      check_ladder(ladder_profile(chain, s.slice->name, static_cast<int>(prime.exponent)));
    }
  }
}
