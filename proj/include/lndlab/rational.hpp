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

#ifndef LNDLAB_RATIONAL_HPP
#define LNDLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace lndlab {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0 == 0/1)
// as long as every value is built through the arithmetic operators or
// canonicalize() after raw assignment.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" in base 10; throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace lndlab

#endif  // LNDLAB_RATIONAL_HPP
