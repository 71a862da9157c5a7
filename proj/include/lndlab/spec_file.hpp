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

#ifndef LNDLAB_SPEC_FILE_HPP
#define LNDLAB_SPEC_FILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/fiber.hpp"
#include "lndlab/lnd.hpp"

namespace lndlab {

struct NamedPolynomial {
  std::string name;
  Polynomial value;
  int line = 0;
};

struct PrimeSpec {
  std::string name;
  unsigned exponent = 1;
  Polynomial value;
  /// Kernel element whose zero set the samples over this prime avoid.
  std::optional<Polynomial> avoid;
  int line = 0;
};

struct PlinthSpec {
  Polynomial generator;
  Polynomial witness;
  std::vector<PrimeSpec> primes;
  int line = 0;
};

/// lhs = rhs, or delta(lhs) = rhs when written as d(lhs) = rhs.
struct IdentitySpec {
  std::string text;
  Polynomial lhs;
  Polynomial rhs;
  bool derivative = false;
  int line = 0;
};

struct TerminalSpec {
  Polynomial multiplier;
  /// Ambient variable -> smaller multiplier m with m * variable in A[z].
  std::vector<NamedPolynomial> witnesses;
  int line = 0;
};

struct Bounds {
  unsigned nilpotency = 32;
  unsigned preimage_degree = 6;
  unsigned chain_stages = 6;
  unsigned samples = 3;
};

/// A parsed and validated derivation spec file.
struct DerivationSpec {
  std::string name;
  Ring ring;
  Derivation derivation;
  std::vector<NamedPolynomial> kernel;
  std::optional<NamedPolynomial> slice;
  /// Generators of A[z] (kernel generators, then the slice, unless declared).
  std::vector<NamedPolynomial> subalgebra;
  std::optional<PlinthSpec> plinth;
  std::vector<IdentitySpec> identities;
  std::vector<Point> points;
  std::vector<Polynomial> fixed_locus;
  std::optional<TerminalSpec> terminal;
  /// Prime -> expected generators of the last chain stage.
  std::map<std::string, std::vector<NamedPolynomial>> targets;
  /// Prime -> stage variable -> element of B.
  std::map<std::string, std::map<std::string, Polynomial>> maps;
  Bounds bounds;

  std::vector<TaggedGenerator> kernel_generators() const;
  std::vector<TaggedGenerator> subalgebra_generators() const;
  FiberSetup fiber_setup() const;
};

/// Parses spec text. Syntax errors, undeclared names and failed witness
/// validation throw ParseError anchored at the offending line.
DerivationSpec parse_spec_text(const std::string& text, const std::string& name);

/// Reads and parses a file; the spec name is the file stem.
DerivationSpec parse_spec(const std::string& path);

/// Parses "A=1, B=-2/3" into a point.
Point parse_point(const std::string& text, int line = 0);

}  // namespace lndlab

#endif  // LNDLAB_SPEC_FILE_HPP
