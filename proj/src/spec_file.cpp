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

#include "lndlab/spec_file.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lndlab/error.hpp"
#include "lndlab/poly_text.hpp"

namespace lndlab {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped, trimmed
  int column = 1;    // 1-based column of text[0] in the raw line
};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

// Splits at the first occurrence of `sep`; the right part keeps its column.
bool split_at(const Line& line, const std::string& sep, Line& left, Line& right) {
  std::size_t pos = line.text.find(sep);
  if (pos == std::string::npos) return false;
  std::size_t lead = 0;
  left = {line.number, trim(line.text.substr(0, pos), &lead), line.column + static_cast<int>(lead)};
  std::string rest = line.text.substr(pos + sep.size());
  right = {line.number, trim(rest, &lead), line.column + static_cast<int>(pos + sep.size() + lead)};
  return true;
}

std::vector<Line> split_list(const Line& line, char sep) {
  std::vector<Line> out;
  std::size_t start = 0;
  while (start <= line.text.size()) {
    std::size_t end = line.text.find(sep, start);
    if (end == std::string::npos) end = line.text.size();
    std::size_t lead = 0;
    std::string piece = trim(line.text.substr(start, end - start), &lead);
    if (!piece.empty()) out.push_back({line.number, piece, line.column + static_cast<int>(start + lead)});
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) { throw ParseError(what, line.number, line.column); }

unsigned parse_unsigned(const Line& line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(line.text, &used);
    if (used != line.text.size() || line.text.front() == '-') throw std::invalid_argument("");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    fail(line, "expected a nonnegative integer, got '" + line.text + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::string name) : name_(std::move(name)) {}

  DerivationSpec parse(const std::string& text);

 private:
  Polynomial poly(const Line& line) const {
    if (!ring_) fail(line, "the [ring] section must come first");
    NameResolver resolver = [this](const std::string& n) -> std::optional<Polynomial> {
      auto it = macros_.find(n);
      if (it == macros_.end()) return std::nullopt;
      return it->second;
    };
    try {
      return parse_polynomial(line.text, ring_, resolver, line.number);
    } catch (const UndeclaredVariable& e) {
      throw UndeclaredVariable(e.name(), line.number, line.column + e.column() - 1);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line.number, line.column + e.column() - 1);
    }
  }

  void define(const Line& at, const std::string& name, const Polynomial& value) {
    if (!is_identifier(name)) fail(at, "'" + name + "' is not a valid name");
    if (ring_->contains(name)) fail(at, "name '" + name + "' collides with a ring variable");
    if (macros_.count(name)) fail(at, "name '" + name + "' is already defined");
    macros_.emplace(name, value);
  }

  NamedPolynomial named(const Line& line, bool defines) {
    Line left, right;
    if (!split_at(line, "=", left, right)) fail(line, "expected 'name = expression'");
    Polynomial value = poly(right);
    if (defines) define(left, left.text, value);
    return {left.text, value, line.number};
  }

  void section_line(const std::string& section, const Line& line);
  void finish();

  std::string name_;
  Ring ring_;
  std::map<std::string, Polynomial> macros_;
  std::map<std::string, Polynomial> images_;
  std::map<std::string, int> image_lines_;
  std::vector<Polynomial> relations_;
  int derivation_line_ = 0;
  std::vector<NamedPolynomial> kernel_;
  std::optional<NamedPolynomial> slice_;
  std::vector<Line> subalgebra_lines_;
  std::optional<Polynomial> generator_, witness_;
  int plinth_line_ = 0;
  std::vector<PrimeSpec> primes_;
  std::vector<IdentitySpec> identities_;
  std::vector<Point> points_;
  std::vector<Polynomial> fixed_;
  std::optional<Polynomial> terminal_a_;
  int terminal_line_ = 0;
  std::vector<NamedPolynomial> terminal_witnesses_;
  std::map<std::string, std::vector<NamedPolynomial>> targets_;
  std::map<std::string, std::map<std::string, Polynomial>> maps_;
  std::vector<std::pair<Line, Line>> map_lines_;
  Bounds bounds_;
  std::optional<DerivationSpec> result_;
};

void Parser::section_line(const std::string& section, const Line& line) {
  Line left, right;
  if (section == "ring") {
    if (ring_) fail(line, "the ring is already declared");
    std::vector<std::string> names;
    std::string text = line.text;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    for (std::string n; in >> n;) {
      if (!is_identifier(n)) fail(line, "'" + n + "' is not a valid variable name");
      if (std::find(names.begin(), names.end(), n) != names.end()) fail(line, "variable '" + n + "' declared twice");
      names.push_back(n);
    }
    try {
      ring_ = RingContext::make(names);
    } catch (const Error& e) {
      fail(line, e.what());
    }
  } else if (section == "define") {
    named(line, true);
  } else if (section == "kernel") {
    kernel_.push_back(named(line, true));
  } else if (section == "slice") {
    if (slice_) fail(line, "only one local slice may be declared");
    slice_ = named(line, true);
  } else if (section == "subalgebra") {
    subalgebra_lines_.push_back(line);
  } else if (section == "derivation") {
    if (!split_at(line, "->", left, right)) fail(line, "expected 'variable -> expression'");
    if (!ring_ || !ring_->contains(left.text)) fail(left, "'" + left.text + "' is not a ring variable");
    if (images_.count(left.text)) fail(left, "image of '" + left.text + "' given twice");
    images_.emplace(left.text, poly(right));
    image_lines_.emplace(left.text, line.number);
    if (derivation_line_ == 0) derivation_line_ = line.number;
  } else if (section == "relations") {
    if (split_at(line, "=", left, right)) {
      relations_.push_back(poly(left) - poly(right));
    } else {
      relations_.push_back(poly(line));
    }
  } else if (section == "plinth") {
    if (!split_at(line, "=", left, right)) fail(line, "expected 'key = expression'");
    if (plinth_line_ == 0) plinth_line_ = line.number;
    if (left.text == "generator") {
      generator_ = poly(right);
    } else if (left.text == "witness") {
      witness_ = poly(right);
    } else if (left.text.rfind("prime", 0) == 0) {
      std::istringstream in(left.text);
      std::string kw, name, exponent, extra;
      in >> kw >> name >> exponent;
      if (kw != "prime" || name.empty() || exponent.empty() || (in >> extra)) {
        fail(left, "expected 'prime <name> <exponent> = expression'");
      }
      PrimeSpec p{name, parse_unsigned({line.number, exponent, left.column}), Polynomial(ring_), std::nullopt,
                  line.number};
      Line value = right, avoid;
      if (split_at(right, " avoid ", value, avoid)) p.avoid = poly(avoid);
      p.value = poly(value);
      primes_.push_back(p);
    } else {
      fail(left, "unknown plinth key '" + left.text + "'");
    }
  } else if (section == "identities") {
    if (!split_at(line, "=", left, right)) fail(line, "expected 'lhs = rhs'");
    bool derivative = left.text.size() > 3 && left.text.compare(0, 2, "d(") == 0 && left.text.back() == ')';
    if (derivative) left = {left.number, left.text.substr(2, left.text.size() - 3), left.column + 2};
    identities_.push_back({line.text, poly(left), poly(right), derivative, line.number});
  } else if (section == "points") {
    points_.push_back(parse_point(line.text, line.number));
  } else if (section == "fixed") {
    for (const auto& piece : split_list(line, ',')) fixed_.push_back(poly(piece));
  } else if (section == "terminal") {
    if (!split_at(line, "=", left, right)) fail(line, "expected 'a = expression' or 'variable = multiplier'");
    if (left.text == "a") {
      terminal_a_ = poly(right);
      terminal_line_ = line.number;
    } else {
      if (!ring_->contains(left.text)) fail(left, "'" + left.text + "' is not a ring variable");
      terminal_witnesses_.push_back({left.text, poly(right), line.number});
    }
  } else if (section == "target" || section == "maps") {
    if (!split_at(line, ":", left, right)) fail(line, "expected 'prime: ...'");
    for (const auto& piece : split_list(right, ',')) {
      if (section == "target") {
        targets_[left.text].push_back({piece.text, poly(piece), line.number});
      } else {
        Line var, value;
        if (!split_at(piece, "=", var, value)) fail(piece, "expected 'variable = expression'");
        maps_[left.text].emplace(var.text, poly(value));
      }
    }
  } else if (section == "bounds") {
    if (!split_at(line, "=", left, right)) fail(line, "expected 'key = value'");
    unsigned v = parse_unsigned(right);
    if (left.text == "nilpotency") {
      bounds_.nilpotency = v;
    } else if (left.text == "preimage_degree") {
      bounds_.preimage_degree = v;
    } else if (left.text == "chain_stages") {
      bounds_.chain_stages = v;
    } else if (left.text == "samples") {
      bounds_.samples = v;
    } else {
      fail(left, "unknown bound '" + left.text + "'");
    }
  } else {
    fail(line, "line outside a known section");
  }
}

DerivationSpec Parser::parse(const std::string& text) {
  static const std::set<std::string> kSections{"ring",       "define", "kernel",     "slice",  "subalgebra",
                                               "derivation", "relations", "plinth", "identities", "points",
                                               "fixed",      "terminal", "target", "maps",       "bounds"};
  std::istringstream in(text);
  std::string raw, section;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    std::size_t lead = 0;
    std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash), &lead);
    if (body.empty()) continue;
    Line line{number, body, static_cast<int>(lead) + 1};
    if (body.front() == '[') {
      if (body.back() != ']') fail(line, "unterminated section header");
      section = trim(body.substr(1, body.size() - 2));
      if (!kSections.count(section)) fail(line, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) fail(line, "line outside a section");
    section_line(section, line);
  }
  if (!ring_) throw ParseError("missing [ring] section", number, 1);
  finish();
  return *std::move(result_);
}

void Parser::finish() {
  Ideal relations(ring_, relations_);
  std::optional<Derivation> delta;
  try {
    delta.emplace(ring_, images_, relations);
  } catch (const InvariantViolation& e) {
    throw ParseError(e.what(), derivation_line_, 1);
  }
  for (const auto& k : kernel_) {
    Polynomial d = delta->apply(k.value);
    if (!d.is_zero()) {
      throw ParseError("kernel generator '" + k.name + "' is not killed by the derivation: delta = " + d.str(),
                       k.line, 1);
    }
  }
  if (slice_) {
    Polynomial a = delta->apply(slice_->value);
    if (a.is_zero()) throw ParseError("slice '" + slice_->name + "' is in the kernel", slice_->line, 1);
    if (!delta->apply(a).is_zero()) {
      throw ParseError("delta(" + slice_->name + ") = " + a.str() + " is not in the kernel", slice_->line, 1);
    }
  }
  std::vector<NamedPolynomial> subalgebra;
  if (subalgebra_lines_.empty()) {
    subalgebra = kernel_;
    if (slice_) subalgebra.push_back(*slice_);
  } else {
    for (const auto& line : subalgebra_lines_) {
      Line left, right;
      if (split_at(line, "=", left, right)) {
        subalgebra.push_back(named(line, !macros_.count(left.text)));
      } else if (macros_.count(line.text)) {
        subalgebra.push_back({line.text, macros_.at(line.text), line.number});
      } else {
        fail(line, "unknown subalgebra generator '" + line.text + "'");
      }
    }
  }
  std::optional<PlinthSpec> plinth;
  if (plinth_line_ != 0) {
    if (!generator_ || !witness_) throw ParseError("plinth needs a generator and a witness", plinth_line_, 1);
    plinth = PlinthSpec{*generator_, *witness_, primes_, plinth_line_};
  }
  std::optional<TerminalSpec> terminal;
  if (terminal_line_ != 0 || !terminal_witnesses_.empty()) {
    if (!terminal_a_) throw ParseError("terminal check needs 'a = ...'", terminal_line_, 1);
    terminal = TerminalSpec{*terminal_a_, terminal_witnesses_, terminal_line_};
  }
  result_.emplace(DerivationSpec{name_, ring_, *delta, kernel_, slice_, subalgebra, plinth, identities_, points_,
                                 fixed_, terminal, targets_, maps_, bounds_});
}

}  // namespace

std::vector<TaggedGenerator> DerivationSpec::kernel_generators() const {
  std::vector<TaggedGenerator> out;
  for (const auto& k : kernel) out.push_back({k.name, k.value});
  return out;
}

std::vector<TaggedGenerator> DerivationSpec::subalgebra_generators() const {
  std::vector<TaggedGenerator> out;
  for (const auto& k : subalgebra) out.push_back({k.name, k.value});
  return out;
}

FiberSetup DerivationSpec::fiber_setup() const {
  FiberSetup setup{{ring, derivation.relations(), "B"}, kernel_generators(), {}};
  if (slice) setup.probes.push_back({slice->name, slice->value});
  return setup;
}

Point parse_point(const std::string& text, int line_number) {
  Point point;
  Line line{line_number, text, 1};
  for (const auto& piece : split_list(line, ',')) {
    Line key, value;
    if (!split_at(piece, "=", key, value)) fail(piece, "expected 'name=value'");
    if (!is_identifier(key.text)) fail(key, "'" + key.text + "' is not a valid name");
    try {
      if (!point.emplace(key.text, parse_rational(value.text)).second) fail(key, "coordinate '" + key.text + "' repeated");
    } catch (const std::invalid_argument&) {
      fail(value, "'" + value.text + "' is not a rational number");
    }
  }
  if (point.empty()) fail(line, "empty point");
  return point;
}

DerivationSpec parse_spec_text(const std::string& text, const std::string& name) {
  return Parser(name).parse(text);
}

DerivationSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str(), std::filesystem::path(path).stem().string());
}

}  // namespace lndlab
