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

#include "lndlab/modification.hpp"

#include <algorithm>
#include <cctype>

#include "lndlab/error.hpp"

namespace lndlab {

namespace {

bool has_numbered_name(const std::vector<std::string>& names, const std::string& stem) {
  for (const auto& n : names) {
    if (n.size() > stem.size() && n.compare(0, stem.size(), stem) == 0 &&
        std::all_of(n.begin() + static_cast<std::ptrdiff_t>(stem.size()), n.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; })) {
      return true;
    }
  }
  return false;
}

std::string describe_center(const Polynomial& f, const std::vector<Polynomial>& center) {
  std::string out = "(" + f.str();
  for (const auto& a : center) out += ", " + a.str();
  return out + ")";
}

Assignment tag_images(const std::vector<TaggedGenerator>& generators) {
  Assignment out;
  for (const auto& g : generators) out.emplace(g.tag, g.image);
  return out;
}

}  // namespace

Modification affine_modification(const PresentedAlgebra& base, const Polynomial& f,
                                 const std::vector<Polynomial>& center, const std::string& stem) {
  if (f.is_zero()) throw Error("affine modification along zero");
  if (!base.relations.plus(center).contains(f)) {
    throw Error("modification element " + f.str() + " is not in the center");
  }
  Ideal principal = base.relations.plus({f});
  std::vector<Polynomial> kept;
  for (const auto& a : center) {
    if (!principal.contains(a)) kept.push_back(a);
  }
  std::vector<std::string> names = base.ambient->names();
  std::vector<std::string> fresh;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::string name = stem + std::to_string(k + 1);
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
    names.push_back(name);
    fresh.push_back(name);
  }
  Ring ring = RingContext::make(names);
  std::vector<Polynomial> gens;
  for (const auto& r : base.relations.generators()) gens.push_back(embed(r, ring));
  Polynomial fe = embed(f, ring);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    gens.push_back(fe * Polynomial::variable(ring, fresh[k]) - embed(kept[k], ring));
  }
  Ideal relations(ring, gens);
  if (!kept.empty()) relations = saturation(relations, fe);
  relations = Ideal(ring, relations.groebner());
  std::string provenance = (base.provenance.empty() ? std::string("R") : base.provenance) + "[" +
                           describe_center(f, kept) + "/" + f.str() + "]";
  return {{ring, relations, provenance}, f, kept, fresh};
}

Derivation lift_derivation(const Derivation& delta, const Modification& modification) {
  const PresentedAlgebra& m = modification.algebra;
  if (!delta.apply(modification.f).is_zero()) {
    throw InvariantViolation("delta(" + modification.f.str() + ") is not zero");
  }
  Ideal center = delta.relations().plus(modification.center).plus({modification.f});
  std::map<std::string, Polynomial> images;
  for (std::size_t v = 0; v < delta.ring()->size(); ++v) {
    images.emplace(delta.ring()->names()[v], embed(delta.image(v), m.ambient));
  }
  Polynomial fe = embed(modification.f, m.ambient);
  for (std::size_t k = 0; k < modification.center.size(); ++k) {
    Polynomial da = delta.apply(modification.center[k]);
    if (!center.contains(da)) {
      throw InvariantViolation("center is not delta-stable: delta(" + modification.center[k].str() + ") = " + da.str());
    }
    auto q = divide_modulo(embed(da, m.ambient), fe, m.relations);
    if (!q) {
      throw InvariantViolation("delta(" + modification.center[k].str() + ")/" + modification.f.str() +
                               " is not in the modification");
    }
    images.emplace(modification.new_variables[k], *q);
  }
  return Derivation(m.ambient, images, m.relations);
}

std::vector<TaggedGenerator> stage_generators(const ModificationChain& chain, std::size_t index) {
  if (index == 0) return chain.base_generators;
  const ChainStage& stage = chain.stages.at(index - 1);
  std::vector<TaggedGenerator> out;
  for (const auto& name : stage.modification.algebra.ambient->names()) {
    out.push_back({name, stage.inclusion.at(name)});
  }
  return out;
}

ModificationChain chain_build(const Derivation& delta, const std::vector<TaggedGenerator>& base_generators,
                              const std::string& prime, const Polynomial& alpha, unsigned max_stages) {
  PresentedAlgebra target{delta.ring(), delta.relations(), "B"};
  Subalgebra base_sub(target.relations, base_generators);
  const Ring& tags = base_sub.tags();
  if (!same_ring(alpha.ring(), tags)) throw RingMismatch("prime must be given in the subalgebra tags");
  Ideal syzygies = base_sub.contract(Polynomial(tags), 1);
  PresentedAlgebra base{tags, Ideal(tags, syzygies.groebner()), "A[z]"};

  std::map<std::string, Polynomial> base_images;
  for (const auto& g : base_generators) {
    auto e = base_sub.member(delta.apply(g.image));
    if (!e) throw InvariantViolation("subalgebra is not delta-stable at " + g.tag);
    base_images.emplace(g.tag, *e);
  }
  Derivation base_derivation(tags, base_images, base.relations);
  if (!base_derivation.apply(alpha).is_zero()) {
    throw InvariantViolation("prime " + prime + " is not in the kernel");
  }
  const Assignment to_target = tag_images(base_generators);
  const Polynomial alpha_target = substitute(alpha, to_target, target.ambient);

  std::string stem = "Y";
  while (has_numbered_name(target.ambient->names(), stem) || has_numbered_name(tags->names(), stem)) stem += "Y";

  ModificationChain chain{prime, alpha, base, base_derivation, base_generators, target, {}, std::nullopt};
  Subalgebra previous = base_sub;
  for (unsigned i = 1; i <= max_stages + 1; ++i) {
    Ideal contraction = base_sub.contract(alpha, i);
    Modification mod = affine_modification(base, pow(alpha, i), contraction.groebner(), stem);
    mod.algebra.provenance = "B_" + std::to_string(i);

    std::map<std::string, Polynomial> inclusion(to_target.begin(), to_target.end());
    const Polynomial denominator = pow(alpha_target, i);
    for (std::size_t k = 0; k < mod.center.size(); ++k) {
      auto q = divide_modulo(substitute(mod.center[k], to_target, target.ambient), denominator, target.relations);
      if (!q) throw InvariantViolation("contraction generator " + mod.center[k].str() + " is not divisible in B");
      inclusion.emplace(mod.new_variables[k], *q);
    }
    std::vector<TaggedGenerator> gens;
    for (const auto& name : mod.algebra.ambient->names()) gens.push_back({name, inclusion.at(name)});
    Subalgebra current(target.relations, gens);

    bool contains_previous = true;
    for (const auto& g : previous.generators()) {
      if (!current.member(g.image)) contains_previous = false;
    }
    if (i > 1) {
      bool equal = contains_previous;
      for (const auto& g : gens) {
        if (equal && !previous.member(g.image)) equal = false;
      }
      if (equal) {
        chain.stabilized_at = i - 1;
        break;
      }
    }
    if (i == max_stages + 1) break;
    // Lifted only once the stage is kept: the probe stage past the fixed point is dropped.
    Derivation lifted = lift_derivation(base_derivation, mod);
    chain.stages.push_back({i, contraction, mod, lifted, inclusion, contains_previous});
    previous = current;
  }
  return chain;
}

bool TerminalReport::terminal() const {
  for (const auto& e : entries) {
    if (!e.expression) return false;
  }
  return true;
}

TerminalReport terminal_check(const Subalgebra& base, const std::vector<TaggedGenerator>& generators,
                              const Polynomial& a) {
  TerminalReport report;
  for (const auto& b : generators) report.entries.push_back({b.tag, base.member(a * b.image)});
  return report;
}

std::vector<GenerationCheck> generation_identity_check(const ModificationChain& chain) {
  std::vector<GenerationCheck> out;
  if (chain.stages.empty()) return out;
  const std::vector<Polynomial>& g = chain.stages.front().modification.center;
  std::size_t reach = 0;
  while (reach < chain.stages.size()) {
    const Ideal& I = chain.stages[reach].contraction;
    if (!std::all_of(g.begin(), g.end(), [&](const Polynomial& p) { return I.contains(p); })) break;
    ++reach;
  }
  for (std::size_t j = 1; j <= reach; ++j) {
    Ideal expected = chain.base.relations.plus(g).plus({pow(chain.alpha, static_cast<unsigned>(j))});
    out.push_back({static_cast<unsigned>(j), expected.equals(chain.stages[j - 1].contraction)});
  }
  return out;
}

bool kernel_stability_check(const ModificationChain& chain, const std::vector<std::string>& kernel_tags) {
  for (const auto& stage : chain.stages) {
    for (const auto& tag : kernel_tags) {
      if (!stage.derivation.apply(Polynomial::variable(stage.derivation.ring(), tag)).is_zero()) return false;
    }
  }
  return true;
}

std::optional<std::string> endpoint_generator(const ModificationChain& chain) {
  if (chain.stages.empty()) return std::nullopt;
  const ChainStage& last = chain.stages.back();
  const Ring& ring = last.derivation.ring();
  Ideal principal = last.modification.algebra.relations.plus({embed(chain.alpha, ring)});
  std::vector<std::string> order = last.modification.new_variables;
  for (const auto& n : ring->names()) {
    if (std::find(order.begin(), order.end(), n) == order.end()) order.push_back(n);
  }
  for (const auto& n : order) {
    if (!principal.contains(last.derivation.image(n))) return n;
  }
  return std::nullopt;
}

PresentationCheck presentation_check(const ModificationChain& chain, const ChainStage& stage,
                                     const std::map<std::string, Polynomial>& map) {
  const PresentedAlgebra& target = chain.target;
  const Ring& ring = stage.modification.algebra.ambient;
  Assignment full;
  for (const auto& name : ring->names()) {
    auto it = map.find(name);
    full.emplace(name, it != map.end() ? it->second : stage.inclusion.at(name));
  }
  PresentationCheck check;
  check.agrees_with_inclusion = true;
  for (const auto& [name, image] : full) {
    if (!target.relations.contains(image - stage.inclusion.at(name))) check.agrees_with_inclusion = false;
  }
  check.relations_preserved = true;
  for (const auto& r : stage.modification.algebra.relations.generators()) {
    if (!target.relations.contains(substitute(r, full, target.ambient))) check.relations_preserved = false;
  }
  std::vector<TaggedGenerator> gens;
  for (const auto& name : ring->names()) gens.push_back({name, full.at(name)});
  Subalgebra image(target.relations, gens);
  check.surjective = true;
  for (std::size_t v = 0; v < target.ambient->size(); ++v) {
    if (!image.member(Polynomial::variable(target.ambient, v))) check.surjective = false;
  }
  return check;
}

PrimeReduction PrimeReduction::make(const Polynomial& alpha) {
  const Ring& ring = alpha.ring();
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (alpha.degree_in(v) != 1) continue;
    auto coeffs = coefficients_in(alpha, v);
    if (!coeffs[1].is_constant()) continue;
    std::vector<std::string> rest;
    for (std::size_t w = 0; w < ring->size(); ++w) {
      if (w != v) rest.push_back(ring->names()[w]);
    }
    PrimeReduction r;
    r.residue = RingContext::make(rest);
    r.eliminated = ring->names()[v];
    Polynomial solved = embed(coeffs[0].scaled(Rational(-1) / coeffs[1].constant_value()), r.residue);
    r.substitution.emplace(r.eliminated, solved);
    for (const auto& n : rest) r.substitution.emplace(n, Polynomial::variable(r.residue, n));
    return r;
  }
  throw Error("prime " + alpha.str() + " is not linear in a generator with constant coefficient");
}

Polynomial PrimeReduction::operator()(const Polynomial& p) const {
  return substitute(p, substitution, residue);
}

bool LadderProfile::monotone() const {
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i] < exponents[i - 1]) return false;
  }
  return !exponents.empty() && exponents.front() == 1;
}

bool LadderProfile::breakpoint_bound() const {
  if (breakpoints.empty() || breakpoints.front() == 0) return false;
  for (std::size_t j = 1; j <= breakpoints.size(); ++j) {
    unsigned l = breakpoints[j - 1];
    if (l == 0) continue;
    if (exponents[l - 1] != j || j * breakpoints.front() > l) return false;
  }
  return true;
}

namespace {

// Generator of the extension of an ideal of A-bar[zbar] to K[zbar], K = Frac(A-bar),
// as a primitive polynomial of A-bar[zbar]; zero for the zero ideal.
Polynomial extended_generator(const std::vector<Polynomial>& gens, std::size_t zbar) {
  Polynomial g(gens.front().ring());
  for (const auto& p : gens) {
    if (!p.is_zero()) g = multivariate_gcd(g, p);
  }
  if (g.is_zero()) return g;
  Polynomial content(g.ring());
  for (const auto& c : coefficients_in(g, zbar)) {
    if (!c.is_zero()) content = multivariate_gcd(content, c);
  }
  return exact_div(g, content).primitive();
}

}  // namespace

LadderProfile ladder_profile(const ModificationChain& chain, const std::string& zbar, int plinth_exponent) {
  if (!chain.base.relations.is_zero()) {
    throw Error("ladder requires A[z] to be a polynomial ring in its generators");
  }
  PrimeReduction reduce = PrimeReduction::make(chain.alpha);
  const std::size_t z = reduce.residue->index(zbar);
  LadderProfile ladder{chain.prime, zbar, Polynomial(reduce.residue), 0, {}, {}, 0, 0};
  ladder.plinth_exponent = plinth_exponent;
  for (const auto& stage : chain.stages) {
    std::vector<Polynomial> reduced;
    for (const auto& g : stage.contraction.groebner()) reduced.push_back(reduce(g));
    Polynomial gi = extended_generator(reduced, z);
    if (gi.is_zero()) {
      throw InvariantViolation("reduction of I_" + std::to_string(stage.exponent) + " modulo " + chain.prime +
                               " is zero");
    }
    if (ladder.exponents.empty()) {
      ladder.gbar = gi;
      ladder.gbar_degree = gi.degree_in(z);
    }
    unsigned e = 0;
    if (gi.degree_in(z) > 0) {
      if (ladder.gbar_degree == 0 || gi.degree_in(z) % ladder.gbar_degree != 0 ||
          !(pow(ladder.gbar, static_cast<unsigned>(gi.degree_in(z) / ladder.gbar_degree)).primitive() == gi)) {
        throw InvariantViolation("reduction of I_" + std::to_string(stage.exponent) + " is not a power of " +
                                 ladder.gbar.str());
      }
      e = static_cast<unsigned>(gi.degree_in(z) / ladder.gbar_degree);
    }
    ladder.exponents.push_back(e);
  }
  unsigned top = ladder.exponents.empty() ? 0 : *std::max_element(ladder.exponents.begin(), ladder.exponents.end());
  ladder.breakpoints.assign(top, 0);
  for (std::size_t i = 0; i < ladder.exponents.size(); ++i) {
    if (ladder.exponents[i] > 0) ladder.breakpoints[ladder.exponents[i] - 1] = static_cast<unsigned>(i + 1);
  }
  int l1 = ladder.breakpoints.empty() ? 0 : static_cast<int>(ladder.breakpoints.front());
  ladder.q1 = plinth_exponent - l1;
  return ladder;
}

}  // namespace lndlab
