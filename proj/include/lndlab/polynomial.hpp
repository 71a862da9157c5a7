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

#ifndef LNDLAB_POLYNOMIAL_HPP
#define LNDLAB_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/rational.hpp"
#include "lndlab/ring.hpp"

namespace lndlab {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept sorted in decreasing order under the ring's default order
/// with no zero coefficients, so structural equality is polynomial equality.
/// Values are immutable in practice: every operation returns a new value.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, const Rational& constant);
  /// Builds from arbitrary (monomial, coefficient) pairs; merges duplicates
  /// and drops zeros.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial variable(const Ring& ring, const std::string& name);
  static Polynomial variable(const Ring& ring, std::size_t index);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value when is_constant(); zero otherwise.
  Rational constant_value() const;

  /// Leading term under the ring's default order; requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;
  bool involves(std::size_t var) const { return (support() >> var) & 1u; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Scales to integer coefficients with gcd 1 and positive leading
  /// coefficient.
  Polynomial primitive() const;

  bool operator==(const Polynomial& other) const;
  std::size_t hash() const;

  /// Canonical text form, e.g. "x^2*y - 3/2*z + 1".
  std::string str() const;

 private:
  void canonicalize();

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& p);
Polynomial pow(const Polynomial& p, unsigned exponent);

/// Returns p / q; throws InexactDivision when q does not divide p and
/// std::domain_error for q == 0.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);
/// True with quotient when q | p.
bool divides(const Polynomial& q, const Polynomial& p, Polynomial* quotient = nullptr);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);
Polynomial partial_derivative(const Polynomial& p, const std::string& var);

/// Simultaneous substitution. Each entry maps a variable of p's ring to a
/// polynomial in `target`; unmapped variables are sent to the variable of the
/// same name in `target` (UnknownVariable if absent).
using Assignment = std::map<std::string, Polynomial>;
Polynomial substitute(const Polynomial& p, const Assignment& assignment, const Ring& target);
/// Same-ring substitution.
Polynomial substitute(const Polynomial& p, const Assignment& assignment);

/// Re-expresses p in `target` matching variables by name.
Polynomial embed(const Polynomial& p, const Ring& target);

/// Exponent of variable `var` as a polynomial in that variable: returns
/// coefficients c_0..c_d with p = sum c_i * var^i, each c_i free of var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace lndlab

#endif  // LNDLAB_POLYNOMIAL_HPP
