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

#ifndef LNDLAB_POLY_TEXT_HPP
#define LNDLAB_POLY_TEXT_HPP

#include <functional>
#include <optional>
#include <string>

#include "lndlab/polynomial.hpp"

namespace lndlab {

/// Looks up a named polynomial that is not a ring variable (a macro).
using NameResolver = std::function<std::optional<Polynomial>(const std::string&)>;

/// Parses the text syntax: integers and p/q literals, identifiers, + - * ^,
/// parentheses; '*' may be omitted between factors. Identifiers resolve to
/// ring variables first, then through `resolver`. Errors carry the column
/// (1-based) of the offending token; `line` is copied into the error.
Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            const NameResolver& resolver = {}, int line = 0);

}  // namespace lndlab

#endif  // LNDLAB_POLY_TEXT_HPP
