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

#ifndef LNDLAB_RING_HPP
#define LNDLAB_RING_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lndlab {

/// Hard storage limit for exponent vectors. The configurable guardrail in
/// GbLimits is normally much lower.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector. Slots past the ring's variable count stay zero, so
/// monomials from rings with the same count compare and hash consistently.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff variable i occurs; quick divisibility rejection.
  std::uint32_t support() const { return support_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) in the sense other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { kLex, kGrevlex, kBlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0); }
  /// Variables [0, split) form the eliminated block; each block is grevlex.
  static MonomialOrder block(std::size_t split) {
    return MonomialOrder(Kind::kBlockElimination, split);
  }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Three-way comparison of monomials over a ring with `nvars` variables.
  std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  /// Throws if the split index does not lie strictly inside the variable list.
  void validate(std::size_t nvars) const;

  std::string describe() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Ordered list of distinct variable names plus the default monomial order.
/// Rings compare by value; two contexts with equal names and order are the
/// same ring.
class RingContext {
 public:
  static Ring make(std::vector<std::string> names,
                   MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws UnknownVariable.
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  bool operator==(const RingContext& other) const {
    return names_ == other.names_ && order_ == other.order_;
  }

 private:
  RingContext(std::vector<std::string> names, MonomialOrder order);

  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const Ring& a, const Ring& b);

/// Names with a check that identifiers are usable in the text syntax.
bool is_identifier(const std::string& name);

}  // namespace lndlab

#endif  // LNDLAB_RING_HPP
