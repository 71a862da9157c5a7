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

#include "lndlab/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "lndlab/error.hpp"
#include "lndlab/univariate.hpp"

namespace lndlab {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator lives in another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

namespace {

Ring ring_of(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw Error("ideal needs a ring");
  return generators.front().ring();
}

}  // namespace

// Copies the generators: the ring must be read before anything is moved from.
Ideal::Ideal(std::vector<Polynomial> generators) : Ideal(ring_of(generators), generators) {}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const& {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, basis] : cache_->bases) {
    if (o == order) return *basis;
  }
  auto basis = std::make_unique<std::vector<Polynomial>>(groebner_basis(generators_, order));
  cache_->bases.emplace_back(order, std::move(basis));
  return *cache_->bases.back().second;
}

Polynomial Ideal::normal_form(const Polynomial& p, const MonomialOrder& order) const {
  if (!same_ring(p.ring(), ring_)) throw RingMismatch("normal form of a polynomial from another ring");
  return reduce(p, groebner(order), order);
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("sum of ideals in different rings");
  return plus(other.generators_);
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.str());
  return out;
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
  if (!ring->contains(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!ring->contains(candidate)) return candidate;
  }
}

namespace {

// Computes ideal ∩ k[keep] and expresses it in `target` (whose variables must
// include every kept name).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const Ring& target) {
  const Ring& ring = ideal.ring();
  std::set<std::string> keep_set(keep.begin(), keep.end());
  for (const auto& k : keep) ring->index(k);
  std::vector<std::string> names;
  for (const auto& n : ring->names()) {
    if (!keep_set.contains(n)) names.push_back(n);
  }
  const std::size_t split = names.size();
  if (split == 0) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, target));
    return Ideal(target, std::move(gens));
  }
  names.insert(names.end(), keep.begin(), keep.end());
  Ring work = RingContext::make(names, MonomialOrder::block(split));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, work));
  auto basis = groebner_basis(gens, work->order());
  const std::uint32_t elim_mask = (1u << split) - 1u;
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    if ((g.support() & elim_mask) == 0) kept.push_back(embed(g, target));
  }
  return Ideal(target, std::move(kept));
}

}  // namespace

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep) {
  if (keep.empty()) throw Error("elimination must keep at least one variable");
  return eliminate(ideal, keep, RingContext::make(keep));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("intersection of ideals in different rings");
  const Ring& ring = a.ring();
  std::string t = fresh_name(ring, "_t");
  std::vector<std::string> names{t};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  Ring work = RingContext::make(names, MonomialOrder::block(1));
  Polynomial tv = Polynomial::variable(work, t);
  Polynomial one(work, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tv * embed(g, work));
  for (const auto& g : b.generators()) gens.push_back((one - tv) * embed(g, work));
  return eliminate(Ideal(work, std::move(gens)), ring->names(), ring);
}

Ideal saturation(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("saturation by the zero polynomial");
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("saturating element lives in another ring");
  const Ring& ring = ideal.ring();
  if (f.is_constant()) return ideal;
  if (std::popcount(f.support()) == 1 && f.total_degree() > 1) {
    // I : f^inf = I : r^inf for the squarefree part r of a univariate f.
    Polynomial r = squarefree_part(f);
    if (r.total_degree() < f.total_degree()) return saturation(ideal, r);
  }
  if (std::popcount(f.support()) == 1 && f.total_degree() == 1 && f.size() == 2) {
    // f = u v + c: move the root to v = 0, where the elimination is much cheaper.
    std::size_t v = static_cast<std::size_t>(std::countr_zero(f.support()));
    const std::string& name = ring->names()[v];
    Polynomial var = Polynomial::variable(ring, v);
    Rational u = f.leading().coefficient;
    Rational c = f.constant_value();
    Assignment to{{name, (1 / u) * (var - Polynomial(ring, c))}};
    std::vector<Polynomial> moved;
    for (const auto& g : ideal.generators()) moved.push_back(substitute(g, to, ring));
    Ideal sat = saturation(Ideal(ring, std::move(moved)), var);
    Assignment back{{name, u * var + Polynomial(ring, c)}};
    std::vector<Polynomial> gens;
    for (const auto& g : sat.groebner()) gens.push_back(substitute(g, back, ring));
    return Ideal(ring, std::move(gens));
  }
  std::string t = fresh_name(ring, "_T");
  std::vector<std::string> names{t};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  Ring work = RingContext::make(names, MonomialOrder::block(1));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, work));
  gens.push_back(Polynomial(work, Rational(1)) - Polynomial::variable(work, t) * embed(f, work));
  return eliminate(Ideal(work, std::move(gens)), ring->names(), ring);
}

bool radical_contains(const Ideal& ideal, const Polynomial& p) {
  if (p.is_zero()) return true;
  const Ring& ring = ideal.ring();
  std::vector<std::string> names = ring->names();
  names.push_back(fresh_name(ring, "_T"));
  Ring work = RingContext::make(names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, work));
  gens.push_back(Polynomial(work, Rational(1)) - Polynomial::variable(work, names.back()) * embed(p, work));
  return Ideal(work, std::move(gens)).is_unit();
}

Polynomial multivariate_lcm(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring());
  if (p.is_constant()) return q.primitive();
  if (q.is_constant()) return p.primitive();
  Ideal meet = ideal_intersection(Ideal(p.ring(), {p}), Ideal(q.ring(), {q}));
  const auto& gb = meet.groebner();
  if (gb.size() != 1) throw InvariantViolation("intersection of principal ideals is not principal");
  return gb.front().primitive();
}

Polynomial multivariate_gcd(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() && q.is_zero()) throw Error("gcd(0, 0) is undefined");
  if (p.is_zero()) return q.primitive();
  if (q.is_zero()) return p.primitive();
  if (p.is_constant() || q.is_constant()) return Polynomial(p.ring(), Rational(1));
  return exact_div(p * q, multivariate_lcm(p, q)).primitive();
}

Ring tag_ring(const std::vector<TaggedGenerator>& generators) {
  std::vector<std::string> names;
  for (const auto& g : generators) names.push_back(g.tag);
  return RingContext::make(std::move(names));
}

Subalgebra::Subalgebra(Ideal relations, std::vector<TaggedGenerator> generators)
    : relations_(std::move(relations)), generators_(std::move(generators)) {
  const Ring& ambient = relations_.ring();
  tags_ = tag_ring(generators_);
  std::vector<std::string> names = ambient->names();
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (ambient->contains(generators_[j].tag)) {
      throw Error("tag '" + generators_[j].tag + "' collides with an ambient variable");
    }
    if (!same_ring(generators_[j].image.ring(), ambient)) {
      throw RingMismatch("subalgebra generator '" + generators_[j].tag + "' is not in the ambient ring");
    }
    std::string name = "_g" + std::to_string(j);
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
    names.push_back(name);
    internal_.push_back(name);
  }
  work_ = RingContext::make(std::move(names), MonomialOrder::block(ambient->size()));
  std::vector<Polynomial> gens;
  for (const auto& r : relations_.generators()) gens.push_back(embed(r, work_));
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    gens.push_back(Polynomial::variable(work_, internal_[j]) - embed(generators_[j].image, work_));
  }
  graph_ = Ideal(work_, std::move(gens));
}

Polynomial Subalgebra::to_tags(const Polynomial& p) const {
  Assignment back;
  for (std::size_t j = 0; j < internal_.size(); ++j) back.emplace(internal_[j], Polynomial::variable(tags_, j));
  return substitute(p, back, tags_);
}

Ideal Subalgebra::contract(const Polynomial& f, unsigned power) const {
  Polynomial fw(work_);
  if (same_ring(f.ring(), tags_)) {
    Assignment forward;
    for (std::size_t j = 0; j < internal_.size(); ++j) {
      forward.emplace(tags_->names()[j], Polynomial::variable(work_, internal_[j]));
    }
    fw = substitute(pow(f, power), forward, work_);
  } else if (same_ring(f.ring(), relations_.ring())) {
    fw = embed(pow(f, power), work_);
  } else {
    throw RingMismatch("contraction element must live in the ambient or the tag ring");
  }
  Ideal full = graph_.plus({fw});
  Ring internal_ring = RingContext::make(internal_);
  Ideal eliminated = eliminate(full, internal_, internal_ring);
  std::vector<Polynomial> gens;
  for (const auto& g : eliminated.generators()) gens.push_back(to_tags(embed(g, work_)));
  return Ideal(tags_, std::move(gens));
}

std::optional<Polynomial> Subalgebra::member(const Polynomial& element) const {
  if (!same_ring(element.ring(), relations_.ring())) throw RingMismatch("element is not in the ambient ring");
  Polynomial nf = graph_.normal_form(embed(element, work_));
  const std::uint32_t ambient_mask = (1u << relations_.ring()->size()) - 1u;
  if ((nf.support() & ambient_mask) != 0) return std::nullopt;
  return to_tags(nf);
}

Ideal subalgebra_contract(const Ideal& relations, const std::vector<TaggedGenerator>& generators,
                          const Polynomial& f, unsigned power) {
  return Subalgebra(relations, generators).contract(f, power);
}

std::optional<Polynomial> subalgebra_member(const Polynomial& element, const Ideal& relations,
                                            const std::vector<TaggedGenerator>& generators) {
  return Subalgebra(relations, generators).member(element);
}

std::optional<std::size_t> zero_dim_degree(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  const std::size_t n = ideal.ring()->size();
  const auto& order = ideal.ring()->order();
  if (gb.empty()) return std::nullopt;
  if (gb.size() == 1 && gb.front().is_constant()) return 0;
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(leading_term(g, order).monomial);
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leads) {
    if (std::popcount(m.support()) == 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(m.support()));
      if (bound[v] == 0 || m[v] < bound[v]) bound[v] = m[v];
    }
  }
  for (auto b : bound) {
    if (b == 0) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<unsigned> exps(n, 0);
  // Odometer over the box; standard monomials form an order ideal inside it.
  while (true) {
    Monomial m(exps);
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n) {
      if (++exps[i] < bound[i]) break;
      exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

int krull_dimension(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  const std::size_t n = ideal.ring()->size();
  if (gb.size() == 1 && gb.front().is_constant()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) supports.push_back(leading_term(g, ideal.ring()->order()).monomial.support());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t lt) { return (lt & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<Polynomial> divide_modulo(const Polynomial& p, const Polynomial& f,
                                        const Ideal& relations) {
  require_same_ring(p, f);
  if (f.is_zero()) throw std::domain_error("division by zero");
  if (relations.generators().empty()) {
    Polynomial q(p.ring());
    if (divides(f, p, &q)) return q;
    return std::nullopt;
  }
  if (f.is_constant()) return p.scaled(1 / f.constant_value());
  const Ring& ring = p.ring();
  std::string t = fresh_name(ring, "_T");
  std::vector<std::string> names{t};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  Ring work = RingContext::make(names, MonomialOrder::block(1));
  std::vector<Polynomial> gens;
  for (const auto& g : relations.generators()) gens.push_back(embed(g, work));
  Polynomial tv = Polynomial::variable(work, t);
  gens.push_back(Polynomial(work, Rational(1)) - tv * embed(f, work));
  Ideal local(work, std::move(gens));
  Polynomial nf = local.normal_form(tv * embed(p, work));
  if (nf.involves(0)) return std::nullopt;
  Polynomial h = embed(nf, ring);
  if (!relations.contains(f * h - p)) return std::nullopt;
  return relations.normal_form(h);
}

}  // namespace lndlab
