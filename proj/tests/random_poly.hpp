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

#ifndef LNDLAB_TESTS_RANDOM_POLY_HPP
#define LNDLAB_TESTS_RANDOM_POLY_HPP

#include <random>

#include "lndlab/polynomial.hpp"

namespace lndlab::testing {

inline constexpr int kCases = 200;

inline Rational random_coefficient(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  int c = 0;
  while (c == 0) c = d(rng);
  return Rational(c);
}

// Up to `terms` terms of total degree <= max_degree; `homogeneous` fixes the degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_degree, int terms,
                                    bool homogeneous = false) {
  std::vector<Term> out;
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    int d = homogeneous ? max_degree : deg(rng);
    std::vector<unsigned> e(ring->size(), 0);
    for (int k = 0; k < d; ++k) e[std::uniform_int_distribution<std::size_t>(0, ring->size() - 1)(rng)]++;
    out.push_back({Monomial(e), random_coefficient(rng)});
  }
  return Polynomial(ring, std::move(out));
}

inline Polynomial random_nonzero(std::mt19937_64& rng, const Ring& ring, int max_degree, int terms,
                                 bool homogeneous = false) {
  for (;;) {
    Polynomial p = random_polynomial(rng, ring, max_degree, terms, homogeneous);
    if (!p.is_zero()) return p;
  }
}

}  // namespace lndlab::testing

#endif  // LNDLAB_TESTS_RANDOM_POLY_HPP
