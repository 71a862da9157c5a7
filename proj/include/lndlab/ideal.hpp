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

#ifndef LNDLAB_IDEAL_HPP
#define LNDLAB_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/groebner.hpp"
#include "lndlab/polynomial.hpp"

namespace lndlab {

/// Ideal given by generators, with reduced Groebner bases cached per monomial
/// order. Copies share the cache; the cache is guarded by a mutex, so a handle
/// may be read from several threads.
class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<Polynomial> generators = {});
  /// Generators must be nonempty (their ring is used).
  explicit Ideal(std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced basis under the ring's default order.
  const std::vector<Polynomial>& groebner() const& { return groebner(ring_->order()); }
  const std::vector<Polynomial>& groebner(const MonomialOrder& order) const&;
  /// Temporaries hand out a copy, so the result outlives the cache.
  std::vector<Polynomial> groebner() const&& { return groebner(ring_->order()); }
  std::vector<Polynomial> groebner(const MonomialOrder& order) const&& {
    return static_cast<const Ideal&>(*this).groebner(order);
  }

  Polynomial normal_form(const Polynomial& p) const { return normal_form(p, ring_->order()); }
  Polynomial normal_form(const Polynomial& p, const MonomialOrder& order) const;

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  /// Mutual zero-reduction of generators.
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  bool is_zero() const { return groebner().empty(); }
  bool is_unit() const;

  Ideal operator+(const Ideal& other) const;
  Ideal plus(const std::vector<Polynomial>& more) const;

  /// Generators as text, in order.
  std::vector<std::string> generator_strings() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::unique_ptr<std::vector<Polynomial>>>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// A fresh identifier not in `ring`, built from `stem`.
std::string fresh_name(const Ring& ring, const std::string& stem);

/// I intersected with k[keep]; the result lives in the ring of the kept
/// variables (in their original order).
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep);

Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// I : f^infinity via I + (1 - T f) and elimination of T.
Ideal saturation(const Ideal& ideal, const Polynomial& f);

/// p in the radical of I, via 1 in I + (1 - T p).
bool radical_contains(const Ideal& ideal, const Polynomial& p);

/// gcd(p, q) up to a rational unit, normalized to a primitive integer
/// polynomial with positive leading coefficient. gcd(p, 0) = p (normalized).
Polynomial multivariate_gcd(const Polynomial& p, const Polynomial& q);
Polynomial multivariate_lcm(const Polynomial& p, const Polynomial& q);

/// One named generator of a subalgebra k[rho_1, ..., rho_m] of an ambient
/// presented algebra.
struct TaggedGenerator {
  std::string tag;
  Polynomial image;
};

/// Ring of the tags, in the given order.
Ring tag_ring(const std::vector<TaggedGenerator>& generators);

/// The subalgebra k[rho_1, ..., rho_m] of k[x]/relations, through its graph
/// ideal (relations, T_j - rho_j) under an order eliminating x. Tags must not
/// reuse ambient names. The graph basis is cached, so one object should serve
/// repeated queries.
class Subalgebra {
 public:
  Subalgebra(Ideal relations, std::vector<TaggedGenerator> generators);

  const Ring& tags() const { return tags_; }
  const Ideal& relations() const { return relations_; }
  const std::vector<TaggedGenerator>& generators() const { return generators_; }

  /// { h(T) : h(rho) in relations + (f^power) }. `f` may live in the ambient
  /// ring or in the tag ring (a tag-ring f keeps degrees low).
  Ideal contract(const Polynomial& f, unsigned power) const;

  /// An expression in the tags for `element` when it lies in the subalgebra.
  std::optional<Polynomial> member(const Polynomial& element) const;

 private:
  Polynomial to_tags(const Polynomial& p) const;

  Ideal relations_;
  std::vector<TaggedGenerator> generators_;
  Ring tags_;
  Ring work_;
  std::vector<std::string> internal_;
  Ideal graph_{work_};
};

Ideal subalgebra_contract(const Ideal& relations, const std::vector<TaggedGenerator>& generators,
                          const Polynomial& f, unsigned power);

std::optional<Polynomial> subalgebra_member(const Polynomial& element, const Ideal& relations,
                                            const std::vector<TaggedGenerator>& generators);

/// Vector-space dimension of k[x]/I, or nullopt if I is not zero-dimensional.
/// The unit ideal has dimension 0.
std::optional<std::size_t> zero_dim_degree(const Ideal& ideal);

/// Krull dimension of k[x]/I from the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

/// Solves f * h == p modulo `relations` for h, assuming f is a nonzerodivisor
/// modulo the relations. Returns nullopt when no such h exists.
std::optional<Polynomial> divide_modulo(const Polynomial& p, const Polynomial& f,
                                        const Ideal& relations);

}  // namespace lndlab

#endif  // LNDLAB_IDEAL_HPP
