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

#include "lndlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <set>

#include "lndlab/error.hpp"

namespace lndlab {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw GuardrailExceeded("too many variables for a monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw GuardrailExceeded("variable index out of range");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw GuardrailExceeded("exponent overflow");
  exps_[i] = static_cast<std::uint16_t>(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw GuardrailExceeded("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b,
                                            std::size_t nvars) const {
  switch (kind_) {
    case Kind::kLex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::kGrevlex:
      return grevlex_range(a, b, 0, nvars);
    case Kind::kBlockElimination: {
      auto first = grevlex_range(a, b, 0, split_);
      if (first != 0) return first;
      return grevlex_range(a, b, split_, nvars);
    }
  }
  return std::strong_ordering::equal;
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ == Kind::kBlockElimination && (split_ == 0 || split_ >= nvars)) {
    throw Error("block-elimination split index " + std::to_string(split_) +
                " must lie strictly inside 1.." + std::to_string(nvars));
  }
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::kLex: return "lex";
    case Kind::kGrevlex: return "grevlex";
    case Kind::kBlockElimination: return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingContext::RingContext(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {}

Ring RingContext::make(std::vector<std::string> names, MonomialOrder order) {
  if (names.empty()) throw Error("a ring needs at least one variable");
  if (names.size() > kMaxVariables) {
    throw GuardrailExceeded("ring has " + std::to_string(names.size()) + " variables; storage limit is " +
                            std::to_string(kMaxVariables));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  order.validate(names.size());
  return Ring(new RingContext(std::move(names), order));
}

std::optional<std::size_t> RingContext::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t RingContext::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw UnknownVariable(name);
  return *i;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

}  // namespace lndlab
