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

#ifndef LNDLAB_GROEBNER_HPP
#define LNDLAB_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lndlab/polynomial.hpp"

namespace lndlab {

/// Caps that turn Buchberger blow-up into a GuardrailExceeded error.
struct GbLimits {
  std::size_t max_variables = 10;
  int max_degree = 64;
  std::size_t max_basis_size = 20000;
};

/// Process-wide defaults used when no explicit limits are passed. Set once at
/// start-up (the CLI does this from its flags); reads are not synchronized.
GbLimits& default_gb_limits();

/// Reduced Groebner basis of the ideal generated by `generators` under
/// `order`: monic elements sorted by increasing leading monomial. The zero
/// ideal yields an empty basis, the unit ideal {1}.
///
/// Buchberger's algorithm with the Gebauer-Moeller criteria; critical pairs
/// are taken by smallest lcm (normal strategy) with ties broken by insertion
/// index, so the result is deterministic.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const MonomialOrder& order,
                                       const GbLimits& limits = default_gb_limits());

/// Full remainder of p on division by `basis` under `order`. For a Groebner
/// basis this is the unique normal form.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& order);

/// S-polynomial of f and g under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Leading term of p under `order` (p nonzero).
Term leading_term(const Polynomial& p, const MonomialOrder& order);

/// True when every pairwise S-polynomial reduces to zero modulo `basis`.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

}  // namespace lndlab

#endif  // LNDLAB_GROEBNER_HPP
