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

#include "lndlab/univariate.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lndlab/error.hpp"

namespace lndlab {

namespace {

// Dense coefficient vectors, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

template <class V>
void trim(V& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly to_dense(const Polynomial& u, std::size_t var) {
  QPoly out(static_cast<std::size_t>(std::max(u.degree_in(var), 0)) + 1);
  for (const auto& t : u.terms()) out[t.monomial[var]] += t.coefficient;
  trim(out);
  return out;
}

Polynomial from_dense(const QPoly& a, const Ring& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), a[i]});
  }
  return Polynomial(ring, std::move(terms));
}

QPoly monic(QPoly a) {
  trim(a);
  if (a.empty()) return a;
  Rational inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

QPoly quo(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

// Yun's algorithm on a monic polynomial.
std::vector<std::pair<QPoly, unsigned>> yun(const QPoly& f) {
  std::vector<std::pair<QPoly, unsigned>> out;
  if (deg(f) < 1) return out;
  QPoly a0 = gcd(f, derivative(f));
  QPoly b = quo(f, a0);
  QPoly c = quo(derivative(f), a0);
  QPoly d = sub(c, derivative(b));
  for (unsigned k = 1; deg(b) > 0; ++k) {
    QPoly a = gcd(b, d);
    if (deg(a) > 0) out.emplace_back(monic(a), k);
    b = quo(b, a);
    c = quo(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

// ---- Arithmetic modulo a prime, dense mpz vectors ----

struct ModP {
  Integer p;

  Integer norm(const Integer& a) const {
    Integer r = a % p;
    if (r < 0) r += p;
    return r;
  }
  Integer inv(const Integer& a) const {
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  ZPoly reduce(ZPoly a) const {
    for (auto& c : a) c = norm(c);
    trim(a);
    return a;
  }
  ZPoly make_monic(ZPoly a) const {
    trim(a);
    if (a.empty()) return a;
    Integer i = inv(a.back());
    for (auto& c : a) c = norm(c * i);
    return a;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r));
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(std::move(r));
  }
  void divmod(ZPoly a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
    trim(a);
    Integer lc_inv = inv(b.back());
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      Integer c = norm(a.back() * lc_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = norm(a[i + shift] - c * b[i]);
      trim(a);
    }
    trim(q);
    r = std::move(a);
  }
  ZPoly rem(const ZPoly& a, const ZPoly& b) const {
    ZPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  ZPoly quo(const ZPoly& a, const ZPoly& b) const {
    ZPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return make_monic(a);
  }
  ZPoly powmod(ZPoly base, Integer e, const ZPoly& m) const {
    ZPoly result{Integer(1)};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return result;
  }
};

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// Cantor-Zassenhaus: monic squarefree f mod p -> monic irreducible factors.
std::vector<ZPoly> factor_mod_p(const ZPoly& f, const ModP& F) {
  std::vector<std::pair<ZPoly, int>> distinct;  // (product of degree-d factors, d)
  ZPoly rest = f;
  ZPoly x{Integer(0), Integer(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= zdeg(rest); ++d) {
    h = F.powmod(h, F.p, rest);
    ZPoly g = F.gcd(rest, F.sub(h, x));
    if (zdeg(g) > 0) {
      distinct.emplace_back(g, d);
      rest = F.quo(rest, g);
      h = F.rem(h, rest);
    }
  }
  if (zdeg(rest) > 0) distinct.emplace_back(rest, zdeg(rest));

  std::vector<ZPoly> out;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20261017u);
  std::function<void(const ZPoly&, int)> split = [&](const ZPoly& g, int d) {
    if (zdeg(g) == d) {
      out.push_back(F.make_monic(g));
      return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), F.p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
      ZPoly a(static_cast<std::size_t>(zdeg(g)));
      for (auto& c : a) c = rng.get_z_range(F.p);
      a = F.reduce(a);
      if (zdeg(a) < 1) continue;
      ZPoly b = F.powmod(a, e, g);
      b = F.sub(b, ZPoly{Integer(1)});
      ZPoly c = F.gcd(g, b);
      if (zdeg(c) > 0 && zdeg(c) < zdeg(g)) {
        split(c, d);
        split(F.quo(g, c), d);
        return;
      }
    }
  };
  for (const auto& [g, d] : distinct) split(g, d);
  return out;
}

Integer symmetric(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  if (2 * r > p) r -= p;
  return r;
}

ZPoly primitive_z(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0) {
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
  }
  return a;
}

QPoly to_q(const ZPoly& a) {
  QPoly r;
  for (const auto& c : a) r.emplace_back(c);
  return r;
}

// Exact division over Z; false if b does not divide a.
bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly& q) {
  QPoly qq, rr;
  divmod(to_q(a), to_q(b), qq, rr);
  if (!rr.empty()) return false;
  q.clear();
  for (auto& c : qq) {
    if (c.get_den() != 1) return false;
    q.push_back(c.get_num());
  }
  return true;
}

// Irreducible factors over Z of a squarefree primitive f (deg >= 1).
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  if (zdeg(f) <= 1) return {f};
  const int n = zdeg(f);
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * abs(f.back()) * (Integer(1) << n) * norm;
  Integer p = bound;
  ModP F{p};
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    F.p = p;
    if (F.norm(f.back()) == 0) continue;
    ZPoly fm = F.make_monic(F.reduce(f));
    ZPoly df;
    for (std::size_t i = 1; i < fm.size(); ++i) df.push_back(fm[i] * static_cast<unsigned long>(i));
    df = F.reduce(df);
    if (zdeg(F.gcd(fm, df)) == 0) break;
  }
  std::vector<ZPoly> modular = factor_mod_p(F.make_monic(F.reduce(f)), F);
  std::vector<ZPoly> found;
  std::size_t k = 1;
  while (2 * k <= modular.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{F.norm(f.back())};
      for (auto i : idx) prod = F.mul(prod, modular[i]);
      ZPoly cand;
      for (const auto& c : prod) cand.push_back(symmetric(c, p));
      trim(cand);
      cand = primitive_z(cand);
      ZPoly q;
      if (zdeg(cand) > 0 && zdivides(cand, f, q)) {
        found.push_back(cand);
        f = q;
        for (std::size_t j = k; j-- > 0;) modular.erase(modular.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        progress = true;
        break;
      }
      // Next k-subset in lexicographic order.
      std::size_t m = modular.size();
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++k;
  }
  if (zdeg(f) > 0) found.push_back(primitive_z(f));
  return found;
}

ZPoly clear_denominators(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : a) z.push_back(c.get_num() * (l / c.get_den()));
  return primitive_z(z);
}

}  // namespace

std::size_t univariate_variable(const Polynomial& u) {
  std::uint32_t s = u.support();
  if (std::popcount(s) > 1) throw Error("polynomial '" + u.str() + "' is not univariate");
  return s == 0 ? 0 : static_cast<std::size_t>(std::countr_zero(s));
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& u) {
  std::size_t var = univariate_variable(u);
  std::vector<std::pair<Polynomial, unsigned>> out;
  for (auto& [s, k] : yun(monic(to_dense(u, var)))) out.emplace_back(from_dense(s, u.ring(), var), k);
  return out;
}

Polynomial squarefree_part(const Polynomial& u) {
  Polynomial r(u.ring(), Rational(1));
  for (const auto& [s, k] : squarefree_decomposition(u)) r = r * s;
  return r;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::uint32_t s = a.support() | b.support();
  if (std::popcount(s) > 1) throw Error("univariate gcd of polynomials in different variables");
  std::size_t var = s == 0 ? 0 : static_cast<std::size_t>(std::countr_zero(s));
  return from_dense(gcd(to_dense(a, var), to_dense(b, var)), a.ring(), var);
}

UnivariateFactorization univariate_squarefree_factor(const Polynomial& u) {
  if (u.is_zero()) throw Error("factorization of the zero polynomial");
  std::size_t var = univariate_variable(u);
  QPoly dense = to_dense(u, var);
  UnivariateFactorization result;
  result.content = dense.back();
  for (const auto& [s, k] : yun(monic(dense))) {
    for (const auto& z : factor_squarefree_z(clear_denominators(s))) {
      result.factors.emplace_back(from_dense(monic(to_q(z)), u.ring(), var), k);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    if (a.second != b.second) return a.second < b.second;
    return a.first.str() < b.first.str();
  });
  return result;
}

std::size_t UnivariateFactorization::geometric_root_count() const {
  std::size_t n = 0;
  for (const auto& [f, k] : factors) n += static_cast<std::size_t>(f.total_degree());
  return n;
}

Polynomial UnivariateFactorization::product(const Ring& ring) const {
  Polynomial r(ring, content);
  for (const auto& [f, k] : factors) r = r * pow(f, k);
  return r;
}

}  // namespace lndlab
