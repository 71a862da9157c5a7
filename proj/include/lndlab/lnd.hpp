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

#ifndef LNDLAB_LND_HPP
#define LNDLAB_LND_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/ideal.hpp"
#include "lndlab/polynomial.hpp"

namespace lndlab {

/// A derivation of B = k[x_1..x_n]/relations, given by the images of the
/// ambient variables. Construction checks that every image lives in the ring
/// and that delta(relations) is contained in relations.
class Derivation {
 public:
  /// Variables missing from `images` are sent to zero.
  Derivation(Ring ring, const std::map<std::string, Polynomial>& images);
  Derivation(Ring ring, const std::map<std::string, Polynomial>& images, Ideal relations);

  const Ring& ring() const { return ring_; }
  const Ideal& relations() const { return relations_; }
  bool has_relations() const { return has_relations_; }
  const Polynomial& image(std::size_t var) const { return images_[var]; }
  const Polynomial& image(const std::string& var) const { return images_[ring_->index(var)]; }
  const std::vector<Polynomial>& images() const { return images_; }

  /// Leibniz extension, reduced modulo the relations.
  Polynomial apply(const Polynomial& p) const;
  /// Reduction modulo the relations (identity for a polynomial ring).
  Polynomial reduce(const Polynomial& p) const;
  /// The derivation u * delta.
  Derivation scaled(const Polynomial& u) const;
  bool is_zero() const;

 private:
  Ring ring_;
  std::vector<Polynomial> images_;
  Ideal relations_;
  bool has_relations_ = false;
};

struct NilpotencyResult {
  bool locally_nilpotent = false;
  unsigned bound = 0;
  /// Least n with delta^n(x) = 0, per ambient variable (only when nilpotent).
  std::vector<unsigned> degrees;
};

/// Least n <= bound with delta^n(p) = 0.
std::optional<unsigned> nilpotency_degree(const Derivation& delta, const Polynomial& p, unsigned bound);
NilpotencyResult local_nilpotency_check(const Derivation& delta, unsigned bound);

struct IrreducibilityResult {
  bool irreducible = false;
  Polynomial common_factor;
};

/// gcd of the variable images; throws on the zero derivation.
IrreducibilityResult irreducibility_check(const Derivation& delta);

struct KernelGenerator {
  std::string name;
  Polynomial value;
};

/// Names of the claimed kernel generators that delta does not kill.
std::vector<std::string> kernel_witness_failures(const Derivation& delta,
                                                 const std::vector<KernelGenerator>& generators);

struct LocalSlice {
  Polynomial z;
  Polynomial a;
};

/// Throws InvariantViolation unless delta(z) = a and delta(a) = 0.
void validate_slice(const Derivation& delta, const LocalSlice& slice);

/// numerator / base^exponent, with base not dividing numerator when exponent > 0.
struct LocalizedElement {
  Polynomial numerator;
  Polynomial base;
  unsigned exponent = 0;

  static LocalizedElement normalized(Polynomial numerator, Polynomial base, unsigned exponent);
  std::string str() const;
};

/// pi(b) = sum_i (-1)^i delta^i(b) z^i / (i! a^i).
LocalizedElement dixmier_projection(const Derivation& delta, const LocalSlice& slice,
                                    const Polynomial& b, unsigned nilpotency_bound);

struct PreimageResult {
  std::optional<Polynomial> solution;
  unsigned cap = 0;
};

/// Solves delta(s) = target among polynomials of total degree <= cap.
/// An empty solution is a bounded certificate only.
PreimageResult derivation_preimage(const Derivation& delta, const Polynomial& target, unsigned cap);

struct PrimeFactor {
  std::string name;
  Polynomial prime;
  unsigned exponent = 1;
};

struct PlinthClaim {
  Polynomial generator;
  Polynomial witness;
  std::vector<PrimeFactor> factorization;
};

struct MinimalityCheck {
  std::string prime;
  bool no_preimage = false;
  unsigned cap = 0;
};

struct PlinthReport {
  bool witness_ok = false;
  bool generator_in_kernel = false;
  std::vector<MinimalityCheck> minimality;

  bool passed() const;
};

/// Throws Error when the factorization does not multiply to the generator
/// (up to a rational unit).
PlinthReport plinth_witness_check(const Derivation& delta, const PlinthClaim& claim, unsigned cap);

/// (delta(x_1), ..., delta(x_n)) + relations.
Ideal fixed_locus_ideal(const Derivation& delta);

struct FixedPointReport {
  bool fixed_point_free = false;
  /// Reduced basis of (alpha, theta) + relations when it is not the unit ideal.
  std::vector<Polynomial> locus;
};

FixedPointReport fixed_point_free_check(const Derivation& delta, const Polynomial& theta,
                                        const Polynomial& alpha);

}  // namespace lndlab

#endif  // LNDLAB_LND_HPP
