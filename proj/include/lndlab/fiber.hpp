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

#ifndef LNDLAB_FIBER_HPP
#define LNDLAB_FIBER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/lnd.hpp"
#include "lndlab/modification.hpp"

namespace lndlab {

/// The quotient map Spec B -> Spec A through named kernel generators. Probes
/// are extra functions on B (typically the local slice) adjoined as variables
/// so that components differing only in them can be told apart.
struct FiberSetup {
  PresentedAlgebra algebra;
  std::vector<TaggedGenerator> kernel;
  std::vector<TaggedGenerator> probes;
};

using Point = std::map<std::string, Rational>;

std::string point_string(const Point& point);

enum class FiberMethod { kTriangular, kRadicalTriangular, kDegreeOnly, kNotCurve };

std::string method_name(FiberMethod method);

struct FiberReport {
  Point point;
  FiberMethod method = FiberMethod::kDegreeOnly;
  int dimension = 0;
  /// Degree of the fiber cut by one generic hyperplane (nullopt when not a curve).
  std::optional<std::size_t> degree;
  /// Degrees observed for the successive hyperplane seeds.
  std::vector<std::size_t> seed_degrees;
  bool seed_consistent = true;
  /// Geometric component count over the algebraic closure (triangular methods only).
  std::size_t components = 0;
  std::vector<unsigned> multiplicities;
  /// Variable along each component, and the variable whose roots separate them.
  std::string parameter;
  std::string separator;
  /// Irreducible factors over Q of the separating eliminant, with multiplicities.
  std::vector<std::pair<std::string, unsigned>> factors;

  bool single_line() const;
};

/// Hyperplane seeds used for the degree: seed, seed + 1, seed + 2.
FiberReport fiber_at_point(const FiberSetup& setup, const Point& point, std::uint64_t seed);

/// Points with the kernel generators drawn from [-97, 97], avoiding avoid = 0
/// and satisfying every polynomial in `on` (each linear in some generator with
/// constant coefficient). Polynomials are in the kernel tags.
std::vector<Point> sample_points(const Ring& kernel_tags, const std::vector<Polynomial>& on,
                                 const Polynomial& avoid, std::size_t count, std::uint64_t seed);

struct GenericFiberReport {
  std::vector<FiberReport> samples;
  bool all_single_lines() const;
};

/// Fibers over sampled points with a != 0; each should be a single line.
GenericFiberReport generic_fiber_check(const FiberSetup& setup, const Polynomial& a, std::size_t samples,
                                       std::uint64_t seed);

/// deg of g-bar; throws InvariantViolation unless it exceeds 1.
int line_count_lower_bound(const LadderProfile& ladder);

/// p modulo alpha in A-bar[z-bar].
Polynomial reduce_mod_prime(const Polynomial& p, const Polynomial& alpha);

/// rad(fixed locus ideal) = (claimed): the claimed ideal contains the fixed
/// locus ideal and each claimed generator is in its radical. For a prime
/// claimed ideal this decides equality of radicals.
bool fixed_locus_radical_check(const Derivation& delta, const std::vector<Polynomial>& claimed);

enum class Triviality { kTrivialBundle, kNotTrivial, kInconclusive };

std::string triviality_name(Triviality t);

struct TrivialityVerdict {
  Triviality verdict = Triviality::kInconclusive;
  std::string reason;
  /// Index into the fiber reports of the witnessing fiber.
  std::optional<std::size_t> witness;
};

/// A verified slice gives a trivial bundle; otherwise a fiber over a plinth
/// prime with two or more components, or a component of multiplicity two or
/// more, rules triviality out.
TrivialityVerdict triviality_verdict(const std::optional<Polynomial>& slice, const std::vector<FiberReport>& fibers);

}  // namespace lndlab

#endif  // LNDLAB_FIBER_HPP
