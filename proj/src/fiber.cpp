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

#include "lndlab/fiber.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lndlab/error.hpp"
#include "lndlab/univariate.hpp"

namespace lndlab {

namespace {

constexpr int kHyperplaneRange = 97;
constexpr int kSeedCount = 3;

Rational draw(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % (2 * kHyperplaneRange + 1)) - kHyperplaneRange);
}

// Polynomials of the fiber ideal, over ambient variables and probe variables.
struct FiberIdeal {
  Ring ring;
  Ideal ideal;
};

FiberIdeal build_fiber_ideal(const FiberSetup& setup, const Point& point) {
  const Ring& ambient = setup.algebra.ambient;
  std::vector<std::string> names = ambient->names();
  std::vector<const TaggedGenerator*> probes;
  for (const auto& p : setup.probes) {
    bool is_variable = p.image.size() == 1 && p.image.leading().coefficient == 1 &&
                       p.image.leading().monomial.degree() == 1;
    if (is_variable) continue;
    if (std::find(names.begin(), names.end(), p.tag) != names.end()) {
      throw Error("probe '" + p.tag + "' collides with an ambient variable");
    }
    names.push_back(p.tag);
    probes.push_back(&p);
  }
  Ring ring = RingContext::make(names);
  std::vector<Polynomial> gens;
  for (const auto& r : setup.algebra.relations.generators()) gens.push_back(embed(r, ring));
  std::set<std::string> seen;
  for (const auto& [tag, value] : point) {
    auto it = std::find_if(setup.kernel.begin(), setup.kernel.end(), [&](const auto& k) { return k.tag == tag; });
    if (it == setup.kernel.end()) throw Error("point coordinate '" + tag + "' is not a kernel generator");
    gens.push_back(embed(it->image, ring) - Polynomial(ring, value));
    seen.insert(tag);
  }
  for (const auto& k : setup.kernel) {
    if (!seen.count(k.tag)) throw Error("point does not fix kernel generator '" + k.tag + "'");
  }
  for (const auto* p : probes) gens.push_back(Polynomial::variable(ring, p->tag) - embed(p->image, ring));
  return {ring, Ideal(ring, gens)};
}

struct Triangular {
  std::string parameter;
  std::string separator;  // empty when every fiber component shares one chart
  Polynomial eliminant;   // in the separator, in the fiber ring
};

// Lex basis with rest > w > v of the shape {u(v)} + {r - ... : r in rest}.
std::optional<Triangular> triangular_shape(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  const auto& names = ring->names();
  for (const auto& w : names) {
    std::vector<std::string> candidates{""};
    for (const auto& n : names) {
      if (n != w) candidates.push_back(n);
    }
    for (const auto& v : candidates) {
      std::vector<std::string> order;
      for (const auto& n : names) {
        if (n != w && n != v) order.push_back(n);
      }
      const std::size_t rest = order.size();
      order.push_back(w);
      if (!v.empty()) order.push_back(v);
      Ring lex = RingContext::make(order, MonomialOrder::lex());
      std::vector<Polynomial> gens;
      for (const auto& g : ideal.generators()) gens.push_back(embed(g, lex));
      const auto& basis = Ideal(lex, gens).groebner();
      std::vector<int> leads(rest, 0);
      std::optional<Polynomial> u;
      bool ok = true;
      for (const auto& g : basis) {
        const Monomial& m = g.leading().monomial;
        std::size_t top = 0;
        while (top < order.size() && m[top] == 0) ++top;
        if (top < rest && m.degree() == 1) {
          ++leads[top];
        } else if (!v.empty() && top == rest + 1 && !u) {
          u = g;
        } else {
          ok = false;
          break;
        }
      }
      if (!ok || std::any_of(leads.begin(), leads.end(), [](int c) { return c != 1; })) continue;
      if (!v.empty() && !u) continue;
      Triangular t{w, v, u ? embed(*u, ring) : Polynomial(ring, Rational(1))};
      return t;
    }
  }
  return std::nullopt;
}

Ideal with_radical_eliminants(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<Polynomial> extra;
  for (const auto& name : ring->names()) {
    Ideal e = elimination_ideal(ideal, {name});
    const auto& basis = e.groebner();
    if (basis.size() == 1 && !basis.front().is_constant()) {
      extra.push_back(embed(squarefree_part(basis.front()), ring));
    }
  }
  return ideal.plus(extra);
}

// A random affine hyperplane, or parameter = c when a parameter is given.
Polynomial hyperplane(const Ring& ring, const std::string& parameter, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Polynomial h(ring);
  if (parameter.empty()) {
    for (std::size_t v = 0; v < ring->size(); ++v) h += Polynomial::variable(ring, v).scaled(draw(rng));
  } else {
    h = Polynomial::variable(ring, parameter);
  }
  return h - Polynomial(ring, draw(rng));
}

std::vector<std::size_t> slice_degrees(const Ideal& ideal, const std::string& parameter, std::uint64_t seed) {
  std::vector<std::size_t> out;
  for (int k = 0; k < kSeedCount; ++k) {
    auto d = zero_dim_degree(ideal.plus({hyperplane(ideal.ring(), parameter, seed + static_cast<std::uint64_t>(k))}));
    out.push_back(d ? *d : 0);
  }
  return out;
}

std::size_t most_frequent(const std::vector<std::size_t>& values) {
  std::size_t best = values.front();
  long best_count = 0;
  for (auto v : values) {
    long c = std::count(values.begin(), values.end(), v);
    if (c > best_count || (c == best_count && v > best)) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

}  // namespace

std::string point_string(const Point& point) {
  std::string out = "(";
  for (const auto& [tag, value] : point) {
    if (out.size() > 1) out += ", ";
    out += tag + "=" + to_string(value);
  }
  return out + ")";
}

std::string method_name(FiberMethod method) {
  switch (method) {
    case FiberMethod::kTriangular:
      return "triangular-factorization";
    case FiberMethod::kRadicalTriangular:
      return "radical-triangular";
    case FiberMethod::kDegreeOnly:
      return "hyperplane-degree-only";
    case FiberMethod::kNotCurve:
      return "not-a-curve";
  }
  return "";
}

bool FiberReport::single_line() const {
  return (method == FiberMethod::kTriangular || method == FiberMethod::kRadicalTriangular) && components == 1 &&
         multiplicities == std::vector<unsigned>{1} && degree == std::optional<std::size_t>(1);
}

FiberReport fiber_at_point(const FiberSetup& setup, const Point& point, std::uint64_t seed) {
  FiberIdeal fiber = build_fiber_ideal(setup, point);
  const Ideal& J = fiber.ideal;
  FiberReport report;
  report.point = point;
  report.dimension = krull_dimension(J);
  if (report.dimension != 1) {
    report.method = FiberMethod::kNotCurve;
    return report;
  }
  auto finish_degree = [&](const std::string& parameter) {
    report.seed_degrees = slice_degrees(J, parameter, seed);
    report.seed_consistent = std::all_of(report.seed_degrees.begin(), report.seed_degrees.end(),
                                         [&](std::size_t d) { return d == report.seed_degrees.front(); });
    report.degree = most_frequent(report.seed_degrees);
  };

  if (auto t = triangular_shape(J)) {
    report.method = FiberMethod::kTriangular;
    report.parameter = t->parameter;
    report.separator = t->separator;
    finish_degree(t->parameter);
    if (t->separator.empty()) {
      report.components = 1;
      report.multiplicities = {1};
      return report;
    }
    auto factorization = univariate_squarefree_factor(t->eliminant);
    for (const auto& [f, k] : factorization.factors) {
      report.factors.emplace_back(f.str(), k);
      for (int r = 0; r < f.total_degree(); ++r) report.multiplicities.push_back(k);
      report.components += static_cast<std::size_t>(f.total_degree());
    }
    return report;
  }

  Ideal reduced = with_radical_eliminants(J);
  if (auto t = triangular_shape(reduced)) {
    report.method = FiberMethod::kRadicalTriangular;
    report.parameter = t->parameter;
    report.separator = t->separator;
    finish_degree(t->parameter);
    const std::size_t n = *report.degree;
    if (t->separator.empty()) {
      report.components = 1;
      report.multiplicities = {static_cast<unsigned>(n)};
      return report;
    }
    Ideal sliced = J.plus({hyperplane(J.ring(), t->parameter, seed)});
    auto factorization = univariate_squarefree_factor(t->eliminant);
    for (const auto& [f, k] : factorization.factors) {
      auto local = zero_dim_degree(sliced.plus({pow(f, static_cast<unsigned>(n))}));
      const auto d = static_cast<std::size_t>(f.total_degree());
      unsigned mult = local ? static_cast<unsigned>(*local / d) : 0;
      report.factors.emplace_back(f.str(), mult);
      for (std::size_t r = 0; r < d; ++r) report.multiplicities.push_back(mult);
      report.components += d;
    }
    return report;
  }

  report.method = FiberMethod::kDegreeOnly;
  finish_degree("");
  return report;
}

std::vector<Point> sample_points(const Ring& kernel_tags, const std::vector<Polynomial>& on,
                                 const Polynomial& avoid, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  std::set<Point> seen;
  const std::size_t max_attempts = 1000 * (count + 1);
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    Assignment values;
    for (const auto& name : kernel_tags->names()) values.emplace(name, Polynomial(kernel_tags, draw(rng)));
    std::set<std::string> solved;
    for (const auto& c : on) {
      bool done = false;
      for (std::size_t v = 0; v < kernel_tags->size() && !done; ++v) {
        const std::string& name = kernel_tags->names()[v];
        if (solved.count(name) || c.degree_in(v) != 1) continue;
        auto coeffs = coefficients_in(c, v);
        if (!coeffs[1].is_constant()) continue;
        Polynomial rest = substitute(coeffs[0], values, kernel_tags);
        values.at(name) = rest.scaled(Rational(-1) / coeffs[1].constant_value());
        solved.insert(name);
        done = true;
      }
      if (!done) throw Error("cannot solve " + c.str() + " for a kernel generator");
    }
    if (!avoid.is_zero() && substitute(avoid, values, kernel_tags).is_zero()) continue;
    Point p;
    for (const auto& [name, value] : values) p.emplace(name, value.constant_value());
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

bool GenericFiberReport::all_single_lines() const {
  return !samples.empty() && std::all_of(samples.begin(), samples.end(), [](const FiberReport& r) {
    return r.single_line();
  });
}

GenericFiberReport generic_fiber_check(const FiberSetup& setup, const Polynomial& a, std::size_t samples,
                                       std::uint64_t seed) {
  GenericFiberReport report;
  for (const auto& p : sample_points(a.ring(), {}, a, samples, seed)) {
    report.samples.push_back(fiber_at_point(setup, p, seed));
  }
  return report;
}

int line_count_lower_bound(const LadderProfile& ladder) {
  if (ladder.gbar_degree <= 1) {
    throw InvariantViolation("degree of " + ladder.gbar.str() + " in " + ladder.zbar + " is at most one");
  }
  return ladder.gbar_degree;
}

Polynomial reduce_mod_prime(const Polynomial& p, const Polynomial& alpha) {
  return PrimeReduction::make(alpha)(p);
}

bool fixed_locus_radical_check(const Derivation& delta, const std::vector<Polynomial>& claimed) {
  Ideal locus = fixed_locus_ideal(delta);
  Ideal target = delta.relations().plus(claimed);
  if (!target.contains(locus)) return false;
  return std::all_of(claimed.begin(), claimed.end(), [&](const Polynomial& c) { return radical_contains(locus, c); });
}

std::string triviality_name(Triviality t) {
  switch (t) {
    case Triviality::kTrivialBundle:
      return "trivial-bundle";
    case Triviality::kNotTrivial:
      return "not-trivial";
    case Triviality::kInconclusive:
      return "inconclusive";
  }
  return "";
}

TrivialityVerdict triviality_verdict(const std::optional<Polynomial>& slice, const std::vector<FiberReport>& fibers) {
  if (slice) return {Triviality::kTrivialBundle, "slice " + slice->str() + " with delta = 1", std::nullopt};
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const FiberReport& f = fibers[i];
    if (f.method != FiberMethod::kTriangular && f.method != FiberMethod::kRadicalTriangular) continue;
    bool multiple = std::any_of(f.multiplicities.begin(), f.multiplicities.end(), [](unsigned m) { return m >= 2; });
    if (f.components >= 2 || multiple) {
      std::string reason = "fiber over " + point_string(f.point) + " has " + std::to_string(f.components) +
                           " component" + (f.components == 1 ? "" : "s");
      if (multiple) reason += " with a multiple component";
      return {Triviality::kNotTrivial, reason, i};
    }
  }
  return {Triviality::kInconclusive, "no sampled fiber is reducible or non-reduced", std::nullopt};
}

}  // namespace lndlab
