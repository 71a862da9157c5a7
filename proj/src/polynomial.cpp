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

#include "lndlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "lndlab/error.hpp"

namespace lndlab {

namespace {

struct DescendingBy {
  const MonomialOrder& order;
  std::size_t nvars;
  bool operator()(const Term& a, const Term& b) const {
    return order.compare(a.monomial, b.monomial, nvars) > 0;
  }
};

}  // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("polynomials live in different rings");
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, const Rational& constant) : Polynomial(std::move(ring)) {
  if (!lndlab::is_zero(constant)) terms_.push_back({Monomial(), constant});
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw Error("polynomial without a ring");
  canonicalize();
}

void Polynomial::canonicalize() {
  const std::size_t n = ring_->size();
  for (const auto& t : terms_) {
    for (std::size_t i = n; i < kMaxVariables; ++i) {
      if (t.monomial[i] != 0) throw RingMismatch("monomial uses a variable outside the ring");
    }
  }
  std::sort(terms_.begin(), terms_.end(), DescendingBy{ring_->order(), n});
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return lndlab::is_zero(t.coefficient); });
  terms_ = std::move(merged);
}

Polynomial Polynomial::variable(const Ring& ring, const std::string& name) {
  return variable(ring, ring->index(name));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->size()) throw UnknownVariable("#" + std::to_string(index));
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.monomial.support();
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

// Merge of two descending term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                        const MonomialOrder& order, std::size_t n) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial, n);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (!lndlab::is_zero(s)) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, +1, ring_->order(), ring_->size());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, -1, ring_->order(), ring_->size());
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (lndlab::is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (lndlab::is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  // Multiplying by a monomial preserves the order of terms.
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coefficient *= c;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading().coefficient;
  return scaled(inv);
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(leading().coefficient) < 0) factor = -factor;
  return scaled(factor);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coefficient != other.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0;
  for (const auto& t : terms_) {
    h = h * 31 + t.monomial.hash();
    h = h * 31 + std::hash<std::string>{}(t.coefficient.get_str());
  }
  return h;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->names();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < names.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial(a.ring(), std::move(products));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(p.ring(), Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool divides(const Polynomial& q, const Polynomial& p, Polynomial* quotient) {
  require_same_ring(p, q);
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = q.leading();
  Polynomial rest = p;
  std::vector<Term> quot;
  while (!rest.is_zero()) {
    const Term& t = rest.leading();
    if (!lead.monomial.divides(t.monomial)) return false;
    Monomial m = t.monomial / lead.monomial;
    Rational c = t.coefficient / lead.coefficient;
    quot.push_back({m, c});
    rest -= q.times_monomial(m, c);
  }
  if (quotient) *quotient = Polynomial(p.ring(), std::move(quot));
  return true;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  Polynomial quotient(p.ring());
  if (!divides(q, p, &quotient)) {
    throw InexactDivision("(" + q.str() + ") does not divide (" + p.str() + ")");
  }
  return quotient;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->size()) throw UnknownVariable("#" + std::to_string(var));
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coefficient * e});
  }
  return Polynomial(p.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
  return partial_derivative(p, p.ring()->index(var));
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment, const Ring& target) {
  const auto& names = p.ring()->names();
  std::vector<Polynomial> images;
  images.reserve(names.size());
  for (const auto& [name, image] : assignment) {
    p.ring()->index(name);
    if (!same_ring(image.ring(), target)) throw RingMismatch("substitution image for '" + name + "' is in another ring");
  }
  for (const auto& name : names) {
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (target->contains(name)) {
      images.push_back(Polynomial::variable(target, name));
    } else {
      // Only an error if the variable actually occurs.
      images.push_back(Polynomial(target));
    }
  }
  std::vector<std::vector<Polynomial>> powers(names.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  const std::uint32_t used = p.support();
  for (std::size_t v = 0; v < names.size(); ++v) {
    if ((used >> v) & 1u && !assignment.contains(names[v]) && !target->contains(names[v])) {
      throw UnknownVariable(names[v]);
    }
  }
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial term(target, t.coefficient);
    for (std::size_t v = 0; v < names.size() && !term.is_zero(); ++v) {
      if (t.monomial[v] != 0) term = term * power_of(v, t.monomial[v]);
    }
    for (auto& u : term.terms()) acc.push_back(u);
  }
  return Polynomial(target, std::move(acc));
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  return substitute(p, assignment, p.ring());
}

Polynomial embed(const Polynomial& p, const Ring& target) {
  if (same_ring(p.ring(), target)) return p;
  const auto& names = p.ring()->names();
  std::vector<std::size_t> map(names.size(), kMaxVariables);
  const std::uint32_t used = p.support();
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (auto j = target->find(names[v])) {
      map[v] = *j;
    } else if ((used >> v) & 1u) {
      throw UnknownVariable(names[v]);
    }
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (t.monomial[v] != 0) m.set(map[v], t.monomial[v]);
    }
    out.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  int d = std::max(p.degree_in(var), 0);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
  return out;
}

}  // namespace lndlab
