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

#include "lndlab/lnd.hpp"

#include <sstream>
#include <unordered_map>

#include "lndlab/error.hpp"
#include "lndlab/linear.hpp"

namespace lndlab {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials in n variables of total degree <= cap, by increasing degree.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned cap) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (unsigned d = 1; d <= cap; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      // Multiply only by variables at or after the last one used, so each
      // monomial is produced once.
      std::size_t start = 0;
      for (std::size_t i = n; i-- > 0;) {
        if (m[i] != 0) {
          start = i;
          break;
        }
      }
      for (std::size_t i = start; i < n; ++i) next.push_back(m * Monomial::variable(i));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

constexpr std::size_t kMaxPreimageUnknowns = 4000;

}  // namespace

Derivation::Derivation(Ring ring, const std::map<std::string, Polynomial>& images)
    : Derivation(ring, images, Ideal(ring)) {}

Derivation::Derivation(Ring ring, const std::map<std::string, Polynomial>& images, Ideal relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  if (!same_ring(relations_.ring(), ring_)) throw RingMismatch("relations live in a different ring");
  images_.assign(ring_->size(), Polynomial(ring_));
  for (const auto& [name, image] : images) {
    if (!same_ring(image.ring(), ring_)) throw RingMismatch("image of '" + name + "' lives in a different ring");
    images_[ring_->index(name)] = image;
  }
  has_relations_ = !relations_.is_zero();
  if (has_relations_) {
    for (auto& image : images_) image = relations_.normal_form(image);
    for (const auto& r : relations_.generators()) {
      if (!apply(r).is_zero()) {
        throw InvariantViolation("derivation does not preserve the relation " + r.str());
      }
    }
  }
}

Polynomial Derivation::reduce(const Polynomial& p) const {
  return has_relations_ ? relations_.normal_form(p) : p;
}

Polynomial Derivation::apply(const Polynomial& p) const {
  require_same_ring(p, images_.empty() ? Polynomial(ring_) : images_.front());
  Polynomial out(ring_);
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (images_[v].is_zero() || !p.involves(v)) continue;
    out += partial_derivative(p, v) * images_[v];
  }
  return reduce(out);
}

Derivation Derivation::scaled(const Polynomial& u) const {
  std::map<std::string, Polynomial> images;
  for (std::size_t v = 0; v < ring_->size(); ++v) images.emplace(ring_->names()[v], u * images_[v]);
  return Derivation(ring_, images, relations_);
}

bool Derivation::is_zero() const {
  for (const auto& image : images_) {
    if (!image.is_zero()) return false;
  }
  return true;
}

std::optional<unsigned> nilpotency_degree(const Derivation& delta, const Polynomial& p, unsigned bound) {
  Polynomial cur = delta.reduce(p);
  for (unsigned n = 0; n <= bound; ++n) {
    if (cur.is_zero()) return n;
    if (n == bound) break;
    cur = delta.apply(cur);
  }
  return std::nullopt;
}

NilpotencyResult local_nilpotency_check(const Derivation& delta, unsigned bound) {
  NilpotencyResult result;
  result.bound = bound;
  for (std::size_t v = 0; v < delta.ring()->size(); ++v) {
    auto n = nilpotency_degree(delta, Polynomial::variable(delta.ring(), v), bound);
    if (!n) {
      result.degrees.clear();
      return result;
    }
    result.degrees.push_back(*n);
  }
  result.locally_nilpotent = true;
  return result;
}

IrreducibilityResult irreducibility_check(const Derivation& delta) {
  if (delta.is_zero()) throw Error("irreducibility of the zero derivation");
  Polynomial g(delta.ring());
  for (const auto& image : delta.images()) {
    if (!image.is_zero()) g = multivariate_gcd(g, image);
  }
  return {g.is_constant(), g};
}

std::vector<std::string> kernel_witness_failures(const Derivation& delta,
                                                 const std::vector<KernelGenerator>& generators) {
  std::vector<std::string> failures;
  for (const auto& g : generators) {
    if (!delta.apply(g.value).is_zero()) failures.push_back(g.name);
  }
  return failures;
}

void validate_slice(const Derivation& delta, const LocalSlice& slice) {
  if (slice.a.is_zero()) throw InvariantViolation("local slice image is zero");
  if (!delta.reduce(delta.apply(slice.z) - slice.a).is_zero()) {
    throw InvariantViolation("delta(" + slice.z.str() + ") is not " + slice.a.str());
  }
  if (!delta.apply(slice.a).is_zero()) throw InvariantViolation("slice image " + slice.a.str() + " is not in the kernel");
}

LocalizedElement LocalizedElement::normalized(Polynomial numerator, Polynomial base, unsigned exponent) {
  if (numerator.is_zero()) return {std::move(numerator), std::move(base), 0};
  Polynomial q(numerator.ring());
  while (exponent > 0 && divides(base, numerator, &q)) {
    numerator = q;
    --exponent;
  }
  return {std::move(numerator), std::move(base), exponent};
}

std::string LocalizedElement::str() const {
  if (exponent == 0) return numerator.str();
  std::ostringstream out;
  out << "(" << numerator.str() << ")/(" << base.str() << ")";
  if (exponent > 1) out << "^" << exponent;
  return out.str();
}

LocalizedElement dixmier_projection(const Derivation& delta, const LocalSlice& slice,
                                    const Polynomial& b, unsigned nilpotency_bound) {
  validate_slice(delta, slice);
  auto n = nilpotency_degree(delta, b, nilpotency_bound);
  if (!n) throw GuardrailExceeded("delta is not nilpotent on " + b.str() + " within " + std::to_string(nilpotency_bound) + " steps");
  if (*n == 0) return LocalizedElement::normalized(Polynomial(delta.ring()), slice.a, 0);
  // Common denominator a^(n-1): term i contributes (-1)^i d^i(b) z^i a^(n-1-i) / i!.
  const unsigned top = *n - 1;
  Polynomial numerator(delta.ring());
  Polynomial d = delta.reduce(b);
  Rational factorial = 1;
  for (unsigned i = 0; i <= top; ++i) {
    if (i > 0) {
      d = delta.apply(d);
      factorial *= i;
    }
    Rational c = (i % 2 == 0 ? Rational(1) : Rational(-1)) / factorial;
    numerator += (d * pow(slice.z, i) * pow(slice.a, top - i)).scaled(c);
  }
  return LocalizedElement::normalized(delta.reduce(numerator), slice.a, top);
}

PreimageResult derivation_preimage(const Derivation& delta, const Polynomial& target, unsigned cap) {
  PreimageResult result;
  result.cap = cap;
  const Ring& ring = delta.ring();
  Polynomial goal = delta.reduce(target);
  if (goal.is_zero()) {
    result.solution = Polynomial(ring);
    return result;
  }
  std::vector<Monomial> unknowns = monomials_up_to(ring->size(), cap);
  if (unknowns.size() > kMaxPreimageUnknowns) {
    throw GuardrailExceeded("preimage search with " + std::to_string(unknowns.size()) + " unknowns");
  }
  std::vector<Polynomial> images;
  images.reserve(unknowns.size());
  std::unordered_map<Monomial, std::size_t, MonomialHash> rows;
  auto row_of = [&](const Monomial& m) {
    return rows.emplace(m, rows.size()).first->second;
  };
  for (const auto& m : unknowns) {
    images.push_back(delta.apply(Polynomial(ring, {{m, Rational(1)}})));
    for (const auto& t : images.back().terms()) row_of(t.monomial);
  }
  for (const auto& t : goal.terms()) row_of(t.monomial);
  Matrix system(rows.size(), unknowns.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& t : images[c].terms()) system.at(rows.at(t.monomial), c) = t.coefficient;
  }
  std::vector<Rational> rhs(rows.size());
  for (const auto& t : goal.terms()) rhs[rows.at(t.monomial)] = t.coefficient;
  auto x = solve_linear(system, rhs);
  if (!x) return result;
  std::vector<Term> terms;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (sgn((*x)[c]) != 0) terms.push_back({unknowns[c], (*x)[c]});
  }
  result.solution = delta.reduce(Polynomial(ring, std::move(terms)));
  return result;
}

bool PlinthReport::passed() const {
  if (!witness_ok || !generator_in_kernel) return false;
  for (const auto& m : minimality) {
    if (!m.no_preimage) return false;
  }
  return true;
}

PlinthReport plinth_witness_check(const Derivation& delta, const PlinthClaim& claim, unsigned cap) {
  const Ring& ring = delta.ring();
  Polynomial product(ring, Rational(1));
  for (const auto& f : claim.factorization) product = product * pow(f.prime, f.exponent);
  Polynomial gen = delta.reduce(claim.generator);
  product = delta.reduce(product);
  if (gen.is_zero() || product.is_zero() ||
      !(gen.scaled(product.leading().coefficient / gen.leading().coefficient) == product)) {
    throw Error("plinth factorization does not multiply to " + claim.generator.str());
  }
  PlinthReport report;
  report.witness_ok = delta.reduce(delta.apply(claim.witness) - claim.generator).is_zero();
  report.generator_in_kernel = delta.apply(claim.generator).is_zero();
  for (const auto& f : claim.factorization) {
    auto reduced = delta.has_relations() ? divide_modulo(claim.generator, f.prime, delta.relations())
                                         : std::optional<Polynomial>(exact_div(claim.generator, f.prime));
    if (!reduced) throw Error("plinth factor " + f.name + " does not divide the generator");
    MinimalityCheck check;
    check.prime = f.name;
    check.cap = cap;
    check.no_preimage = !derivation_preimage(delta, *reduced, cap).solution.has_value();
    report.minimality.push_back(check);
  }
  return report;
}

Ideal fixed_locus_ideal(const Derivation& delta) {
  std::vector<Polynomial> gens = delta.images();
  if (delta.has_relations()) {
    for (const auto& r : delta.relations().generators()) gens.push_back(r);
  }
  return Ideal(delta.ring(), gens);
}

FixedPointReport fixed_point_free_check(const Derivation& delta, const Polynomial& theta,
                                        const Polynomial& alpha) {
  std::vector<Polynomial> gens{alpha, theta};
  if (delta.has_relations()) {
    for (const auto& r : delta.relations().generators()) gens.push_back(r);
  }
  Ideal ideal(delta.ring(), gens);
  FixedPointReport report;
  report.fixed_point_free = ideal.is_unit();
  if (!report.fixed_point_free) report.locus = ideal.groebner();
  return report;
}

}  // namespace lndlab
