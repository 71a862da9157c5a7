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

// Acceptance run: one line per criterion, exit 1 if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "lndlab/corpus.hpp"
#include "lndlab/error.hpp"
#include "lndlab/fiber.hpp"
#include "lndlab/modification.hpp"
#include "lndlab/pipeline.hpp"
#include "lndlab/poly_text.hpp"

using namespace lndlab;

namespace {

std::string src(const std::string& rel) { return std::string(LNDLAB_SOURCE_DIR) + "/" + rel; }

// Collects failed expectations for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  int checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

// Parses text over the spec ring with its kernel, slice and extra names.
struct Names {
  const DerivationSpec& spec;
  std::map<std::string, Polynomial> extra;

  Polynomial operator()(const std::string& text) const {
    return parse_polynomial(text, spec.ring, [&](const std::string& n) -> std::optional<Polynomial> {
      for (const auto& k : spec.kernel)
        if (k.name == n) return k.value;
      if (spec.slice && spec.slice->name == n) return spec.slice->value;
      if (auto it = extra.find(n); it != extra.end()) return it->second;
      return std::nullopt;
    });
  }
};

bool same_subalgebra(const Ideal& rel, const std::vector<TaggedGenerator>& a, const std::vector<TaggedGenerator>& b) {
  Subalgebra sa(rel, a), sb(rel, b);
  for (const auto& g : a)
    if (!sb.member(g.image)) return false;
  for (const auto& g : b)
    if (!sa.member(g.image)) return false;
  return true;
}

std::vector<TaggedGenerator> tagged(const std::vector<Polynomial>& ps) {
  std::vector<TaggedGenerator> out;
  for (std::size_t k = 0; k < ps.size(); ++k) out.push_back({"_e" + std::to_string(k), ps[k]});
  return out;
}

ModificationChain chain_for(const DerivationSpec& s, const std::string& prime) {
  Subalgebra base(s.derivation.relations(), s.subalgebra_generators());
  for (const auto& p : s.plinth->primes)
    if (p.name == prime) return chain_build(s.derivation, s.subalgebra_generators(), prime, *base.member(p.value), 6);
  throw Error("no prime " + prime);
}

void criterion_1(Criterion& c) {
  DerivationSpec s = parse_spec(src("corpus/ex4_1.lnd"));
  Names P{s, {}};
  const Derivation& d = s.derivation;
  NilpotencyResult nil = local_nilpotency_check(d, 16);
  c.expect(nil.locally_nilpotent && nil.degrees == std::vector<unsigned>{1, 3, 2}, "nilpotency degrees x:1 y:3 z:2");
  c.expect(irreducibility_check(d).irreducible, "irreducible");

  Polynomial t = P("x^2*y + z^2");
  c.expect(d.apply(t).is_zero(), "delta(t) = 0");
  LocalizedElement pi = dixmier_projection(d, LocalSlice{P("z"), P("x^2")}, P("y"), 16);
  c.expect(pi.numerator == t && pi.base == P("x^2") && pi.exponent == 1, "dixmier_projection(y) = t/x^2");

  PlinthReport plinth = plinth_witness_check(d, PlinthClaim{P("x^2"), P("z"), {{"X", P("x"), 2}}}, 6);
  c.expect(plinth.witness_ok && plinth.generator_in_kernel, "plinth witness delta(z) = x^2");
  c.expect(plinth.minimality.size() == 1 && plinth.minimality[0].no_preimage && plinth.minimality[0].cap == 6,
           "no preimage of x up to degree 6");

  ModificationChain chain = chain_for(s, "X");
  const Ring& tags = chain.base.ambient;
  auto Q = [&](const std::string& text) { return parse_polynomial(text, tags); };
  c.expect(chain.stages.size() >= 2 && chain.stages[0].contraction.equals(Ideal({Q("X"), Q("Z^2 - T")})),
           "I_1 = (x, z^2 - t)");
  c.expect(chain.stages.size() >= 2 && chain.stages[1].contraction.equals(Ideal({Q("X^2"), Q("Z^2 - T")})),
           "I_2 = (x^2, z^2 - t)");
  c.expect(chain.stabilized_at == std::optional<unsigned>(2), "chain stabilizes at stage 2");
  if (chain.stages.size() == 2 && chain.stages[1].modification.new_variables.size() == 1) {
    const ChainStage& last = chain.stages[1];
    std::map<std::string, Polynomial> map{{"X", P("x")}, {"T", t}, {"Z", P("z")}};
    map.emplace(last.modification.new_variables[0], P("-y"));
    c.expect(presentation_check(chain, last, map).holds(), "B_2 = B under Y -> -y");
  } else {
    c.expect(false, "stage 2 has exactly one new variable");
  }

  FiberSetup setup = s.fiber_setup();
  FiberReport f01 = fiber_at_point(setup, {{"X", 0}, {"T", 1}}, 0);
  c.expect(f01.components == 2 && f01.multiplicities == std::vector<unsigned>{1, 1}, "fiber (0,1): 2 lines [1,1]");
  FiberReport f00 = fiber_at_point(setup, {{"X", 0}, {"T", 0}}, 0);
  c.expect(f00.components == 1 && f00.multiplicities == std::vector<unsigned>{2}, "fiber (0,0): 1 line [2]");
  GenericFiberReport gen = generic_fiber_check(setup, parse_polynomial("X", tag_ring(setup.kernel)), 3, 0);
  c.expect(gen.samples.size() == 3 && gen.all_single_lines(), "generic fibers over x != 0 are single lines");
  c.expect(triviality_verdict(std::nullopt, {f01, f00}).verdict == Triviality::kNotTrivial, "verdict NotTrivial");
}

void criterion_2(Criterion& c) {
  DerivationSpec s = parse_spec(src("corpus/ex4_3.lnd"));
  Names P{s, {}};
  P.extra.emplace("S", P("x^2*y + F*z"));
  const Derivation& d = s.derivation;
  c.expect(d.apply(P("F")).is_zero(), "delta(F) = 0");
  c.expect(d.apply(P("G")).is_zero(), "delta(G) = 0");
  c.expect(d.apply(P("R")) == P("-F*G"), "delta(R) = -F*G");
  c.expect(P("R^2 + F^3") == P("G*x"), "R^2 + F^3 = G*x");
  c.expect(P("F*S") == P("G - x^2*R"), "F*S = G - x^2*R");

  const Ideal none(s.ring);
  ModificationChain cf = chain_for(s, "F");
  ModificationChain cg = chain_for(s, "G");
  c.expect(same_subalgebra(none, stage_generators(cf, cf.stages.size()), tagged({P("F"), P("G"), P("R"), P("G^2*S")})),
           "F-first chain ends at k[F,G,R,G^2 S]");
  c.expect(same_subalgebra(none, stage_generators(cg, cg.stages.size()), tagged({P("F"), P("G"), P("R"), P("x")})),
           "G-first chain ends at k[F,G,R,x]");
  Subalgebra base(none, s.subalgebra_generators());
  for (const char* m : {"G*x", "F*G^3*y", "F^2*G^5*z"})
    c.expect(base.member(P(m)).has_value(), std::string(m) + " in A[R]");

  c.expect(ladder_profile(cf, "R", 1).gbar_degree == 5, "ladder degree 5 over F");
  c.expect(ladder_profile(cg, "R", 1).gbar_degree == 2, "ladder degree 2 over G");

  FiberSetup setup = s.fiber_setup();
  c.expect(fiber_at_point(setup, {{"F", 0}, {"G", 1}}, 0).components == 5, "fiber (0,1): 5 components");
  c.expect(fiber_at_point(setup, {{"F", 1}, {"G", 0}}, 0).components == 2, "fiber (1,0): 2 components");
  FiberReport f00 = fiber_at_point(setup, {{"F", 0}, {"G", 0}}, 0);
  c.expect(f00.degree == std::optional<std::size_t>(10) && f00.components == 1, "fiber (0,0): degree 10, 1 component");
  c.expect(fixed_locus_radical_check(d, {P("x"), P("y")}), "fixed locus radical = (x, y)");
}

void criterion_3(Criterion& c) {
  DerivationSpec s = parse_spec(src("corpus/ex4_2.lnd"));
  Names P{s, {}};
  const Derivation& d = s.derivation;
  PlinthReport plinth = plinth_witness_check(d, PlinthClaim{P("x^2"), P("z"), {{"X", P("x"), 2}}}, 6);
  c.expect(plinth.witness_ok && plinth.generator_in_kernel, "plinth x^2 verified");
  c.expect(plinth.minimality.size() == 1 && plinth.minimality[0].no_preimage && plinth.minimality[0].cap == 6,
           "no preimage of x up to degree 6");

  // deg_z h + 1 with h = delta(y).
  std::size_t expected = static_cast<std::size_t>(d.image("y").degree_in(s.ring->index("z"))) + 1;
  FiberSetup setup = s.fiber_setup();
  Ring tags = tag_ring(setup.kernel);
  std::vector<Point> pts = sample_points(tags, {parse_polynomial("X", tags)}, parse_polynomial("H", tags), 3, 0);
  c.expect(pts.size() == 3, "three sample points on V(x)");
  for (const auto& pt : pts) {
    FiberReport f = fiber_at_point(setup, pt, 0);
    c.expect(f.components == expected, "fiber over " + point_string(pt) + " has deg_z h + 1 components");
  }
}

int run_binary(const std::string& path) {
  int status = std::system((path + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion_4(Criterion& c) {
  c.expect(run_binary(LNDLAB_PROPERTY_TESTS) == 0, "property suites pass (" + std::string(LNDLAB_PROPERTY_TESTS) + ")");
}

void criterion_5(Criterion& c) {
  DerivationSpec slice = parse_spec(src("tests/data/slice_control.lnd"));
  PipelineOptions o;
  o.stages = {Stage::kVerdict};
  AnalysisReport r = run_pipeline(slice, o);
  c.expect(r.sections["verdict"]["verdict"] == "trivial-bundle", "slice control gives TrivialBundle");
  c.expect(r.sections["fibers"].value("skipped", "") == "slice exists", "slice control skips fibers");
  c.expect(fixed_locus_ideal(slice.derivation).is_unit(), "slice control has unit fixed locus ideal");

  DerivationSpec red = parse_spec(src("tests/data/reducible_control.lnd"));
  IrreducibilityResult irr = irreducibility_check(red.derivation);
  c.expect(!irr.irreducible && irr.common_factor.monic() == Polynomial::variable(red.ring, "x"), "Reducible(x)");

  bool rejected = false;
  try {
    parse_spec(src("tests/data/bad_kernel.lnd"));
  } catch (const ParseError& e) {
    rejected = std::string(e.what()).find("not killed") != std::string::npos;
  }
  c.expect(rejected, "false kernel generator rejected at parse");
}

void criterion_6(Criterion& c) {
  std::vector<CorpusEntry> a = run_corpus(src("corpus"), 0);
  std::vector<CorpusEntry> b = run_corpus(src("corpus"), 0);
  c.expect(!a.empty(), "corpus is not empty");
  c.expect(corpus_json(a, 0) == corpus_json(b, 0), "two corpus runs are byte-identical");
  for (const auto& e : a) c.expect(e.matches_golden(), e.name + " matches its golden JSON");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"x^2 d/dz - 2z d/dy end to end", criterion_1},
      {"(2,5)-derivation", criterion_2},
      {"z d/dy + x^2 d/dz instance", criterion_3},
      {"property suites", criterion_4},
      {"negative controls", criterion_5},
      {"determinism", criterion_6},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << i + 1 << " " << (c.failures.empty() ? "PASS" : "FAIL") << " (" << secs
         << " s) " << criteria[i].first << ": " << c.checked << " checks";
    for (const auto& f : c.failures) line << "; failed: " << f;
    std::cout << line.str() << "\n";
    failed += !c.failures.empty();
  }
  return failed ? 1 : 0;
}
