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

#include "lndlab/groebner.hpp"

#include <algorithm>
#include <string>

#include "lndlab/error.hpp"

namespace lndlab {

GbLimits& default_gb_limits() {
  static GbLimits limits;
  return limits;
}

namespace {

using Terms = std::vector<Term>;

struct Context {
  const MonomialOrder& order;
  std::size_t nvars;

  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
    return order.compare(a, b, nvars);
  }

  Terms sorted(const Polynomial& p) const {
    Terms t = p.terms();
    if (!(order == p.ring()->order())) {
      std::sort(t.begin(), t.end(),
                [&](const Term& a, const Term& b) { return cmp(a.monomial, b.monomial) > 0; });
    }
    return t;
  }

  // (p without its first `skip` terms) - c * m * g[1..], assuming the leading
  // terms cancel.
  Terms cancel_lead(const Terms& p, std::size_t skip, const Terms& g, const Monomial& m,
                    const Rational& c) const {
    Terms out;
    out.reserve(p.size() - skip + g.size());
    std::size_t i = skip + 1, j = 1;
    Rational scratch;
    while (i < p.size() && j < g.size()) {
      Monomial gm = g[j].monomial * m;
      auto o = cmp(p[i].monomial, gm);
      if (o > 0) {
        out.push_back(p[i++]);
      } else if (o < 0) {
        out.push_back({gm, -c * g[j].coefficient});
        ++j;
      } else {
        scratch = p[i].coefficient - c * g[j].coefficient;
        if (sgn(scratch) != 0) out.push_back({gm, scratch});
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, -c * g[j].coefficient});
    return out;
  }
};

void make_monic(Terms& t) {
  if (t.empty() || t.front().coefficient == 1) return;
  Rational inv = 1 / t.front().coefficient;
  for (auto& x : t) x.coefficient *= inv;
}

// Full reduction modulo monic reducers (those flagged active).
Terms full_reduce(Terms p, const std::vector<Terms>& basis, const std::vector<char>& active,
                  const Context& ctx) {
  Terms remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lt = p[start];
    const Terms* reducer = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active[k] && basis[k].front().monomial.divides(lt.monomial)) {
        reducer = &basis[k];
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lt);
      ++start;
      continue;
    }
    Monomial m = lt.monomial / reducer->front().monomial;
    Rational c = lt.coefficient / reducer->front().coefficient;
    p = ctx.cancel_lead(p, start, *reducer, m, c);
    start = 0;
  }
  return remainder;
}

Terms spoly(const Terms& f, const Terms& g, const Context& ctx) {
  Monomial l = f.front().monomial.lcm(g.front().monomial);
  Monomial mf = l / f.front().monomial;
  Monomial mg = l / g.front().monomial;
  Terms a;
  a.reserve(f.size());
  Rational cf = 1 / f.front().coefficient;
  for (const auto& t : f) a.push_back({t.monomial * mf, t.coefficient * cf});
  Rational cg = 1 / g.front().coefficient;
  Terms b;
  b.reserve(g.size());
  for (const auto& t : g) b.push_back({t.monomial * mg, t.coefficient * cg});
  // a - b with cancelling leads.
  return ctx.cancel_lead(a, 0, b, Monomial(), Rational(1));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  // Sugar degree: the degree the s-polynomial would have with homogenized inputs.
  int sugar = 0;
};

int total_degree(const Terms& t) {
  int d = 0;
  for (const auto& x : t) d = std::max(d, static_cast<int>(x.monomial.degree()));
  return d;
}

class Buchberger {
 public:
  Buchberger(const Context& ctx, const GbLimits& limits) : ctx_(ctx), limits_(limits) {}

  void add_input(Terms t) {
    make_monic(t);
    int sugar = total_degree(t);
    insert(std::move(t), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pairs_[k].sugar != pairs_[best].sugar) {
          if (pairs_[k].sugar < pairs_[best].sugar) best = k;
          continue;
        }
        auto o = ctx_.cmp(pairs_[k].lcm, pairs_[best].lcm);
        if (o < 0 || (o == 0 && std::tie(pairs_[k].i, pairs_[k].j) <
                                    std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Terms h = full_reduce(spoly(basis_[p.i], basis_[p.j], ctx_), basis_, active_, ctx_);
      if (h.empty()) continue;
      make_monic(h);
      insert(std::move(h), std::max(p.sugar, total_degree(h)));
    }
  }

  std::vector<Terms> reduced_basis() const {
    std::vector<Terms> minimal;
    std::vector<char> flags;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) minimal.push_back(basis_[k]);
    }
    std::stable_sort(minimal.begin(), minimal.end(), [&](const Terms& a, const Terms& b) {
      return ctx_.cmp(a.front().monomial, b.front().monomial) < 0;
    });
    // Unreduced input generators may still be active; keep one element per
    // minimal leading monomial.
    std::vector<Terms> kept;
    for (auto& g : minimal) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Terms& h) {
        return h.front().monomial.divides(g.front().monomial);
      });
      if (!redundant) kept.push_back(std::move(g));
    }
    minimal = std::move(kept);
    flags.assign(minimal.size(), 1);
    std::vector<Terms> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      flags[k] = 0;
      Terms tail(minimal[k].begin() + 1, minimal[k].end());
      Terms r = full_reduce(std::move(tail), minimal, flags, ctx_);
      flags[k] = 1;
      Terms full;
      full.reserve(r.size() + 1);
      full.push_back(minimal[k].front());
      for (auto& t : r) full.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    // Tail reduction against the original (not yet tail-reduced) elements is
    // enough: leading terms are the same.
    return out;
  }

 private:
  void insert(Terms h, int sugar) {
    if (h.front().monomial.is_one()) {
      basis_.assign(1, std::move(h));
      active_.assign(1, 1);
      sugar_.assign(1, 0);
      pairs_.clear();
      unit_ = true;
      return;
    }
    if (unit_) return;
    int deg = total_degree(h);
    if (deg > limits_.max_degree) {
      throw GuardrailExceeded("Groebner basis element of degree " + std::to_string(deg) +
                              " exceeds the cap of " + std::to_string(limits_.max_degree));
    }
    if (basis_.size() >= limits_.max_basis_size) {
      throw GuardrailExceeded("Groebner basis exceeded " + std::to_string(limits_.max_basis_size) +
                              " elements");
    }
    const std::size_t hi = basis_.size();
    const Monomial lh = h.front().monomial;
    basis_.push_back(std::move(h));
    active_.push_back(1);
    sugar_.push_back(sugar);

    // Gebauer-Moeller update.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = lh.lcm(basis_[g].front().monomial);
      int s = std::max(sugar_[g] + static_cast<int>(l.degree() - basis_[g].front().monomial.degree()),
                       sugar + static_cast<int>(l.degree() - lh.degree()));
      candidates.push_back({g, hi, l, s});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Monomial& lg = basis_[candidates[a].i].front().monomial;
      if (lh.coprime(lg)) {
        kept.push_back(candidates[a]);
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        const auto& other = candidates[b].lcm;
        if (other.divides(candidates[a].lcm)) {
          // Ties between equal lcms: keep only the first.
          if (!(other == candidates[a].lcm) || b < a) dominated = true;
        }
      }
      if (!dominated) kept.push_back(candidates[a]);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (!lh.coprime(basis_[p.i].front().monomial)) fresh.push_back(p);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial l1 = basis_[p.i].front().monomial.lcm(lh);
      Monomial l2 = basis_[p.j].front().monomial.lcm(lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (auto& p : fresh) pairs_.push_back(p);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].front().monomial)) active_[g] = 0;
    }
  }

  const Context& ctx_;
  const GbLimits& limits_;
  std::vector<Terms> basis_;
  std::vector<char> active_;
  std::vector<int> sugar_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

Polynomial to_polynomial(const Ring& ring, Terms t) { return Polynomial(ring, std::move(t)); }

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const MonomialOrder& order, const GbLimits& limits) {
  if (generators.empty()) return {};
  const Ring& ring = generators.front().ring();
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generators live in different rings");
  }
  if (ring->size() > limits.max_variables) {
    throw GuardrailExceeded("ring has " + std::to_string(ring->size()) +
                            " variables; the Groebner guardrail allows " +
                            std::to_string(limits.max_variables));
  }
  order.validate(ring->size());
  Context ctx{order, ring->size()};
  Buchberger engine(ctx, limits);
  // Feed inputs smallest-first for a stable pair history.
  std::vector<Terms> inputs;
  for (const auto& g : generators) {
    if (!g.is_zero()) inputs.push_back(ctx.sorted(g));
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
    return ctx.cmp(a.front().monomial, b.front().monomial) < 0;
  });
  for (auto& t : inputs) engine.add_input(std::move(t));
  engine.run();
  std::vector<Polynomial> out;
  for (auto& t : engine.reduced_basis()) out.push_back(to_polynomial(ring, std::move(t)));
  return out;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& order) {
  Context ctx{order, p.ring()->size()};
  std::vector<Terms> b;
  for (const auto& g : basis) {
    require_same_ring(p, g);
    if (!g.is_zero()) b.push_back(ctx.sorted(g));
  }
  std::vector<char> active(b.size(), 1);
  return to_polynomial(p.ring(), full_reduce(ctx.sorted(p), b, active, ctx));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(f, g);
  Context ctx{order, f.ring()->size()};
  return to_polynomial(f.ring(), spoly(ctx.sorted(f), ctx.sorted(g), ctx));
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  Context ctx{order, p.ring()->size()};
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (ctx.cmp(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace lndlab
