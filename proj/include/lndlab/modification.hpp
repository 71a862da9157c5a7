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

#ifndef LNDLAB_MODIFICATION_HPP
#define LNDLAB_MODIFICATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/ideal.hpp"
#include "lndlab/lnd.hpp"

namespace lndlab {

/// k[ambient]/relations.
struct PresentedAlgebra {
  Ring ambient;
  Ideal relations;
  std::string provenance;

  static PresentedAlgebra polynomial_ring(const Ring& ring) { return {ring, Ideal(ring), ""}; }
};

/// R[f^-1 I] for the center I = (f, a_1, ..., a_r), presented as
/// R[Y_1..Y_r]/((relations, f Y_k - a_k) : f^infinity).
struct Modification {
  PresentedAlgebra algebra;
  Polynomial f;
  /// Center generators that survived (those not already in (f)), in the base ring.
  std::vector<Polynomial> center;
  std::vector<std::string> new_variables;
};

/// Throws Error when f is zero or does not lie in the center ideal.
Modification affine_modification(const PresentedAlgebra& base, const Polynomial& f,
                                 const std::vector<Polynomial>& center, const std::string& stem = "Y");

/// delta(Y_k) = delta(a_k)/f modulo the new relations. Throws
/// InvariantViolation when delta(f) != 0, the center is not delta-stable, or a
/// quotient does not exist.
Derivation lift_derivation(const Derivation& delta, const Modification& modification);

struct ChainStage {
  unsigned exponent = 0;
  /// I_i, in the base (tag) ring.
  Ideal contraction;
  Modification modification;
  Derivation derivation;
  /// Every ambient variable of the stage, sent into the target algebra.
  std::map<std::string, Polynomial> inclusion;
  /// The previous stage (or the base) maps into this one.
  bool contains_previous = false;
};

struct ModificationChain {
  std::string prime;
  /// The prime as an element of the base ring.
  Polynomial alpha;
  PresentedAlgebra base;
  Derivation base_derivation;
  std::vector<TaggedGenerator> base_generators;
  PresentedAlgebra target;
  std::vector<ChainStage> stages;
  /// Index i with B_i = B_{i+1}, when reached before the cap.
  std::optional<unsigned> stabilized_at;
};

/// Builds B_i = A[z][alpha^-i I_i] from the subalgebra A[z] of the target,
/// given by tagged generators. `alpha` lives in the tag ring. Stages are built
/// until B_i = B_{i+1} or i reaches max_stages.
ModificationChain chain_build(const Derivation& delta, const std::vector<TaggedGenerator>& base_generators,
                              const std::string& prime, const Polynomial& alpha, unsigned max_stages);

/// Generators of stage `index` (0 = base) as tagged elements of the target.
std::vector<TaggedGenerator> stage_generators(const ModificationChain& chain, std::size_t index);

struct TerminalEntry {
  std::string generator;
  std::optional<Polynomial> expression;
};

struct TerminalReport {
  std::vector<TerminalEntry> entries;
  bool terminal() const;
};

/// a * b_j in the subalgebra, for every b_j.
TerminalReport terminal_check(const Subalgebra& base, const std::vector<TaggedGenerator>& generators,
                              const Polynomial& a);

struct GenerationCheck {
  unsigned exponent = 0;
  bool holds = false;
};

/// With I_1 = (alpha, g_1..g_r) and every g_k in I_l, checks I_j = (alpha^j, g_1..g_r)
/// for j <= l over the built stages.
std::vector<GenerationCheck> generation_identity_check(const ModificationChain& chain);

/// Kernel tags killed by every lifted derivation.
bool kernel_stability_check(const ModificationChain& chain, const std::vector<std::string>& kernel_tags);

/// A variable y of the last stage with delta(y) outside (alpha) + relations.
std::optional<std::string> endpoint_generator(const ModificationChain& chain);

struct PresentationCheck {
  bool agrees_with_inclusion = false;
  bool relations_preserved = false;
  bool surjective = false;
  bool holds() const { return agrees_with_inclusion && relations_preserved && surjective; }
};

/// Checks that `map` (stage variable -> target element) is the stage
/// inclusion, respects the stage relations, and hits every target variable.
PresentationCheck presentation_check(const ModificationChain& chain, const ChainStage& stage,
                                     const std::map<std::string, Polynomial>& map);

struct LadderProfile {
  std::string prime;
  /// Name of the variable z-bar of A-bar[z-bar].
  std::string zbar;
  Polynomial gbar;
  int gbar_degree = 0;
  std::vector<unsigned> exponents;
  /// breakpoints[j-1] = last stage index with exponent j (0 when j does not occur).
  std::vector<unsigned> breakpoints;
  int plinth_exponent = 0;
  int q1 = 0;

  bool monotone() const;
  bool breakpoint_bound() const;
};

/// Reduction of a base-ring polynomial modulo alpha, where alpha is linear in
/// some tag with constant coefficient. The result lives in the ring of the
/// remaining tags.
struct PrimeReduction {
  Ring residue;
  std::string eliminated;
  Assignment substitution;

  static PrimeReduction make(const Polynomial& alpha);
  Polynomial operator()(const Polynomial& p) const;
};

LadderProfile ladder_profile(const ModificationChain& chain, const std::string& zbar, int plinth_exponent);

}  // namespace lndlab

#endif  // LNDLAB_MODIFICATION_HPP
