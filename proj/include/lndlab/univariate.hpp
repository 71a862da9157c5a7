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

#ifndef LNDLAB_UNIVARIATE_HPP
#define LNDLAB_UNIVARIATE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lndlab/polynomial.hpp"

namespace lndlab {

/// u = content * prod(factor_i ^ multiplicity_i) with distinct monic
/// factors irreducible over Q, sorted by (degree, text).
struct UnivariateFactorization {
  Rational content;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  /// Number of distinct roots over an algebraic closure.
  std::size_t geometric_root_count() const;
  Polynomial product(const Ring& ring) const;
};

/// Index of the only variable occurring in u, or throws if u involves
/// more than one variable. Constants report the first variable.
std::size_t univariate_variable(const Polynomial& u);

/// Squarefree decomposition (Yun): monic s_1, s_2, ... with
/// u = lc * prod s_k^k. Entries with s_k == 1 are omitted.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& u);

/// Product of the distinct monic irreducible factors of u.
Polynomial squarefree_part(const Polynomial& u);

/// Squarefree decomposition followed by irreducible factorization over Q.
UnivariateFactorization univariate_squarefree_factor(const Polynomial& u);

/// Greatest common divisor of univariate polynomials in the same variable,
/// monic (zero when both are zero).
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lndlab

#endif  // LNDLAB_UNIVARIATE_HPP
