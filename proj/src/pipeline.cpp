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

#include "lndlab/pipeline.hpp"

#include <map>

#include "lndlab/error.hpp"
#include "lndlab/modification.hpp"

namespace lndlab {

namespace {

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

Json fiber_json(const FiberReport& r) {
  Json point = Json::object();
  for (const auto& [k, v] : r.point) point[k] = to_string(v);
  Json j = {{"point", point}, {"method", method_name(r.method)}, {"dimension", r.dimension}};
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["seed_degrees"] = r.seed_degrees;
  j["seed_consistent"] = r.seed_consistent;
  if (r.method == FiberMethod::kTriangular || r.method == FiberMethod::kRadicalTriangular) {
    j["components"] = r.components;
    j["multiplicities"] = r.multiplicities;
    j["parameter"] = r.parameter;
    j["separator"] = r.separator.empty() ? Json(nullptr) : Json(r.separator);
    Json factors = Json::array();
    for (const auto& [f, k] : r.factors) factors.push_back({{"factor", f}, {"multiplicity", k}});
    j["factors"] = factors;
  }
  return j;
}

std::string fiber_summary(const FiberReport& r) {
  std::string s = point_string(r.point) + ": " + method_name(r.method);
  if (r.degree) s += ", degree " + std::to_string(*r.degree);
  if (r.method == FiberMethod::kTriangular || r.method == FiberMethod::kRadicalTriangular) {
    s += ", " + std::to_string(r.components) + " component" + (r.components == 1 ? "" : "s") + ", multiplicities [";
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) s += (i ? "," : "") + std::to_string(r.multiplicities[i]);
    s += "]";
  }
  return s;
}

Verdict pass_if(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

class Pipeline {
 public:
  Pipeline(const DerivationSpec& spec, const PipelineOptions& options)
      : spec_(spec),
        options_(options),
        delta_(spec.derivation),
        kernel_(spec.derivation.relations(), spec.kernel_generators()),
        base_(spec.derivation.relations(), spec.subalgebra_generators()) {
    report_.spec = spec.name;
    report_.seed = options.seed;
  }

  AnalysisReport run();

 private:
  void run_check();
  void run_chain();
  void run_ladder();
  void run_fiber();
  void run_verdict();

  void check_dixmier(Json& section);
  void check_plinth();
  void run_terminal();

  template <class F>
  void guarded(const std::string& stage, F&& body) {
    try {
      body();
    } catch (const GuardrailExceeded& e) {
      report_.add(stage + ".guardrail", "bounded computation", Verdict::kInconclusive,
                  std::string("stage aborted: ") + e.what());
    }
  }

  const DerivationSpec& spec_;
  const PipelineOptions& options_;
  const Derivation& delta_;
  Subalgebra kernel_;
  Subalgebra base_;
  AnalysisReport report_;
  std::optional<Polynomial> slice_witness_;
  std::map<std::string, ModificationChain> chains_;
  std::map<std::string, LadderProfile> ladders_;
  std::vector<FiberReport> fibers_;
  bool fiber_ran_ = false;
};

void Pipeline::run_check() {
  unsigned bound = options_.nilpotency_bound.value_or(spec_.bounds.nilpotency);
  NilpotencyResult nil = local_nilpotency_check(delta_, bound);
  Json degrees = Json::object();
  std::string summary;
  for (std::size_t v = 0; v < nil.degrees.size(); ++v) {
    degrees[spec_.ring->names()[v]] = nil.degrees[v];
    summary += (v ? " " : "") + spec_.ring->names()[v] + ":" + std::to_string(nil.degrees[v]);
  }
  report_.sections["nilpotency"] = {{"locally_nilpotent", nil.locally_nilpotent}, {"bound", bound}, {"degrees", degrees}};
  report_.add("check.nilpotency", "locally nilpotent derivation", nil.locally_nilpotent ? Verdict::kPass : Verdict::kBounded,
              nil.locally_nilpotent ? "nilpotency degrees " + summary
                                    : "some generator not killed within " + std::to_string(bound) + " steps");

  if (delta_.is_zero()) {
    report_.add("check.irreducibility", "delta(B) lies in no proper principal ideal", Verdict::kFail, "zero derivation");
  } else {
    IrreducibilityResult irr = irreducibility_check(delta_);
    report_.sections["irreducibility"] = {{"irreducible", irr.irreducible}, {"common_factor", irr.common_factor.str()}};
    report_.add("check.irreducibility", "delta(B) lies in no proper principal ideal", pass_if(irr.irreducible),
                irr.irreducible ? "gcd of the images is 1" : "reducible: common factor " + irr.common_factor.str());
  }

  Json kernel = Json::object();
  for (const auto& k : spec_.kernel) kernel[k.name] = k.value.str();
  report_.sections["kernel"] = {{"generators", kernel}, {"verified", true}};
  report_.add("check.kernel", "A = Ker delta", Verdict::kPass,
              std::to_string(spec_.kernel.size()) + " kernel generators killed by delta");

  if (spec_.slice) {
    Polynomial a = delta_.apply(spec_.slice->value);
    auto expr = kernel_.member(a);
    report_.sections["slice"] = {{"name", spec_.slice->name},
                                 {"value", spec_.slice->value.str()},
                                 {"image", a.str()},
                                 {"image_in_kernel", expr ? Json(expr->str()) : Json(nullptr)}};
    report_.add("check.slice", "local slice: delta(z) = a in A", expr ? Verdict::kPass : Verdict::kInconclusive,
                "delta(" + spec_.slice->name + ") = " + a.str() +
                    (expr ? " = " + expr->str() : std::string(" (not in the declared generators' span)")));
    if (nil.locally_nilpotent) {
      Json dixmier = Json::object();
      check_dixmier(dixmier);
      report_.sections["dixmier"] = dixmier;
    }
  }
  if (spec_.plinth) check_plinth();

  if (!spec_.identities.empty()) {
    Json ids = Json::array();
    for (const auto& id : spec_.identities) {
      Polynomial lhs = id.derivative ? delta_.apply(id.lhs) : id.lhs;
      bool holds = delta_.reduce(lhs - id.rhs).is_zero();
      ids.push_back({{"identity", id.text}, {"holds", holds}});
      report_.add("check.identity.line" + std::to_string(id.line), "stated polynomial identity", pass_if(holds), id.text);
    }
    report_.sections["identities"] = ids;
  }

  Ideal fixed = fixed_locus_ideal(delta_);
  bool unit = fixed.is_unit();
  Json fl = {{"ideal", strings(delta_.images())}, {"groebner", strings(fixed.groebner())}, {"fixed_point_free", unit}};
  if (!spec_.fixed_locus.empty()) {
    bool ok = fixed_locus_radical_check(delta_, spec_.fixed_locus);
    fl["radical_claim"] = strings(spec_.fixed_locus);
    fl["radical_verified"] = ok;
    std::string claim;
    for (const auto& p : spec_.fixed_locus) claim += (claim.empty() ? "" : ", ") + p.str();
    report_.add("check.fixed_locus", "fixed-point locus is V(delta(B))", pass_if(ok), "radical of (delta(B)) = (" + claim + ")");
  }
  report_.sections["fixed_locus"] = fl;
}

void Pipeline::check_dixmier(Json& section) {
  LocalSlice slice{spec_.slice->value, delta_.apply(spec_.slice->value)};
  unsigned bound = options_.nilpotency_bound.value_or(spec_.bounds.nilpotency);
  bool all = true;
  for (std::size_t v = 0; v < spec_.ring->size(); ++v) {
    Polynomial x = Polynomial::variable(spec_.ring, v);
    LocalizedElement pi = dixmier_projection(delta_, slice, x, bound);
    bool killed = delta_.apply(pi.numerator).is_zero();
    auto expr = killed ? kernel_.member(pi.numerator) : std::nullopt;
    all = all && killed;
    section[spec_.ring->names()[v]] = {{"numerator", pi.numerator.str()},
                                       {"denominator", pi.base.str()},
                                       {"exponent", pi.exponent},
                                       {"in_kernel", killed},
                                       {"kernel_expression", expr ? Json(expr->str()) : Json(nullptr)}};
  }
  report_.add("check.dixmier", "B[1/a] = A[1/a][z] via the Dixmier map", pass_if(all),
              all ? "every projected generator lies in the kernel" : "a projected generator is not killed");
}

void Pipeline::check_plinth() {
  const PlinthSpec& ps = *spec_.plinth;
  PlinthClaim claim{ps.generator, ps.witness, {}};
  for (const auto& p : ps.primes) claim.factorization.push_back({p.name, p.value, p.exponent});
  PlinthReport rep = plinth_witness_check(delta_, claim, spec_.bounds.preimage_degree);
  bool verified = rep.witness_ok && rep.generator_in_kernel;
  Json factorization = Json::array();
  for (const auto& p : ps.primes)
    factorization.push_back({{"prime", p.name}, {"value", p.value.str()}, {"exponent", p.exponent}});
  Json minimality = Json::array();
  for (const auto& m : rep.minimality) minimality.push_back({{"prime", m.prime}, {"no_preimage", m.no_preimage}, {"cap", m.cap}});
  report_.sections["plinth"] = {{"generator", ps.generator.str()},
                                {"verified", verified},
                                {"witness", ps.witness.str()},
                                {"factorization", factorization},
                                {"minimality", minimality}};
  report_.add("check.plinth.witness", "plinth ideal generator delta(s) = g in A", pass_if(verified),
              "delta(" + ps.witness.str() + ") = " + ps.generator.str() + (verified ? "" : " fails"));
  if (verified && ps.generator.is_constant() && !ps.generator.is_zero())
    slice_witness_ = (Rational(1) / ps.generator.constant_value()) * ps.witness;
  for (const auto& m : rep.minimality) {
    report_.add("check.plinth.minimality." + m.prime, "no smaller plinth generator",
                m.no_preimage ? Verdict::kBounded : Verdict::kFail,
                m.no_preimage ? "g/" + m.prime + " has no preimage of degree <= " + std::to_string(m.cap)
                              : "g/" + m.prime + " has a preimage");
  }
}

bool same_subalgebra(const Ideal& relations, const std::vector<TaggedGenerator>& a,
                     const std::vector<TaggedGenerator>& b) {
  Subalgebra sa(relations, a);
  Subalgebra sb(relations, b);
  for (const auto& g : b)
    if (!sa.member(g.image)) return false;
  for (const auto& g : a)
    if (!sb.member(g.image)) return false;
  return true;
}

void Pipeline::run_chain() {
  if (!spec_.plinth) {
    report_.add("chain.skipped", "modification chain over a plinth prime", Verdict::kInconclusive,
                "no plinth factorization declared");
    return;
  }
  Json chains = Json::object();
  std::vector<std::string> kernel_tags;
  for (const auto& k : spec_.kernel) kernel_tags.push_back(k.name);
  for (const auto& p : spec_.plinth->primes) {
    if (options_.prime && *options_.prime != p.name) continue;
    const std::string id = "chain." + p.name;
    auto alpha = base_.member(p.value);
    if (!alpha) {
      report_.add(id + ".prime", "prime lies in A[z]", Verdict::kFail, p.value.str() + " is not in A[z]");
      continue;
    }
    guarded(id, [&] {
      ModificationChain chain = chain_build(delta_, base_.generators(), p.name, *alpha, spec_.bounds.chain_stages);
      Json stages = Json::array();
      bool monotone = true;
      for (const auto& st : chain.stages) {
        Json vars = Json::object();
        for (const auto& y : st.modification.new_variables)
          vars[y] = {{"image", st.inclusion.at(y).str()}, {"derivation", st.derivation.image(y).str()}};
        stages.push_back({{"exponent", st.exponent},
                          {"contraction", strings(st.contraction.groebner())},
                          {"center", strings(st.modification.center)},
                          {"new_variables", vars},
                          {"relations", strings(st.modification.algebra.relations.groebner())},
                          {"contains_previous", st.contains_previous}});
        monotone = monotone && st.contains_previous;
      }
      Json c = {{"alpha", alpha->str()},
                {"stabilized_at", chain.stabilized_at ? Json(*chain.stabilized_at) : Json(nullptr)},
                {"stages", stages}};
      report_.add(id + ".stabilization", "chain B_0 in B_1 in ... stabilizes",
                  chain.stabilized_at ? Verdict::kPass : Verdict::kInconclusive,
                  chain.stabilized_at ? "B_i = B_(i+1) at i = " + std::to_string(*chain.stabilized_at)
                                      : "no stabilization within " + std::to_string(spec_.bounds.chain_stages) + " stages");
      report_.add(id + ".monotone", "each stage contains the previous one", pass_if(monotone),
                  std::to_string(chain.stages.size()) + " stages built");

      Json gen = Json::array();
      bool gen_ok = true;
      for (const auto& g : generation_identity_check(chain)) {
        gen.push_back({{"exponent", g.exponent}, {"holds", g.holds}});
        gen_ok = gen_ok && g.holds;
      }
      c["generation_identity"] = gen;
      report_.add(id + ".generation", "contractions I_j = (alpha^j, g_1..g_r)", pass_if(gen_ok),
                  std::to_string(gen.size()) + " exponents checked");

      bool stable = kernel_stability_check(chain, kernel_tags);
      c["kernel_stable"] = stable;
      report_.add(id + ".kernel", "lifted derivations kill the kernel", pass_if(stable),
                  stable ? "kernel generators killed at every stage" : "a kernel generator is moved");

      auto endpoint = endpoint_generator(chain);
      c["endpoint"] = endpoint ? Json(*endpoint) : Json(nullptr);
      report_.add(id + ".endpoint", "last stage derivation is nonzero modulo alpha",
                  endpoint ? Verdict::kPass : (chain.stabilized_at ? Verdict::kFail : Verdict::kInconclusive),
                  endpoint ? "delta(" + *endpoint + ") is not in (" + p.name + ")" : "every generator maps into (alpha)");

      if (auto m = spec_.maps.find(p.name); m != spec_.maps.end() && !chain.stages.empty()) {
        PresentationCheck pc = presentation_check(chain, chain.stages.back(), m->second);
        c["presentation"] = {{"agrees_with_inclusion", pc.agrees_with_inclusion},
                             {"relations_preserved", pc.relations_preserved},
                             {"surjective", pc.surjective}};
        report_.add(id + ".presentation", "last stage is isomorphic to B", pass_if(pc.holds()),
                    pc.holds() ? "declared map is an isomorphism onto B" : "declared map fails");
      }
      if (auto t = spec_.targets.find(p.name); t != spec_.targets.end()) {
        std::vector<TaggedGenerator> declared;
        for (std::size_t k = 0; k < t->second.size(); ++k)
          declared.push_back({"_t" + std::to_string(k), t->second[k].value});
        bool same = same_subalgebra(delta_.relations(), stage_generators(chain, chain.stages.size()), declared);
        c["target"] = {{"generators", [&] {
                          Json g = Json::array();
                          for (const auto& d : t->second) g.push_back(d.value.str());
                          return g;
                        }()},
                       {"matches", same}};
        report_.add(id + ".target", "last stage is generated by the declared elements", pass_if(same),
                    same ? "subalgebras agree" : "subalgebras differ");
      }
      chains[p.name] = c;
      chains_.emplace(p.name, std::move(chain));
    });
  }
  report_.sections["chains"] = chains;

  if (spec_.terminal) run_terminal();
}

void Pipeline::run_terminal() {
  const TerminalSpec& ts = *spec_.terminal;
  std::vector<TaggedGenerator> vars;
  for (const auto& name : spec_.ring->names()) vars.push_back({name, Polynomial::variable(spec_.ring, name)});
  TerminalReport rep = terminal_check(base_, vars, ts.multiplier);
  Json entries = Json::object();
  for (const auto& e : rep.entries) entries[e.generator] = e.expression ? Json(e.expression->str()) : Json(nullptr);
  Json witnesses = Json::object();
  bool witnesses_ok = true;
  for (const auto& w : ts.witnesses) {
    auto expr = base_.member(w.value * Polynomial::variable(spec_.ring, w.name));
    witnesses[w.name] = {{"multiplier", w.value.str()}, {"expression", expr ? Json(expr->str()) : Json(nullptr)}};
    witnesses_ok = witnesses_ok && expr.has_value();
  }
  report_.sections["terminal"] = {{"a", ts.multiplier.str()}, {"entries", entries}, {"witnesses", witnesses}};
  bool ok = rep.terminal() && witnesses_ok;
  report_.add("chain.terminal", "a B lies in A[z]", pass_if(ok),
              ok ? ts.multiplier.str() + " times every generator of B lies in A[z]" : "some product is not in A[z]");
}

void Pipeline::run_ladder() {
  Json ladders = Json::object();
  for (const auto& [name, chain] : chains_) {
    const std::string id = "ladder." + name;
    unsigned exponent = 1;
    for (const auto& p : spec_.plinth->primes)
      if (p.name == name) exponent = p.exponent;
    try {
      LadderProfile lp = ladder_profile(chain, spec_.slice->name, static_cast<int>(exponent));
      bool mono = lp.monotone();
      bool bound = lp.breakpoint_bound();
      ladders[name] = {{"gbar_degree", lp.gbar_degree},
                       {"gbar", lp.gbar.str()},
                       {"exponents", lp.exponents},
                       {"breakpoints", lp.breakpoints},
                       {"q1", lp.q1},
                       {"line_count_lower_bound", lp.gbar_degree > 1 ? Json(lp.gbar_degree) : Json(nullptr)}};
      report_.add(id + ".monotone", "ladder exponents are nondecreasing", pass_if(mono),
                  "reductions are g-bar^e with e = " + Json(lp.exponents).dump());
      report_.add(id + ".breakpoints", "breakpoints satisfy j l_1 <= l_j", pass_if(bound),
                  "breakpoints " + Json(lp.breakpoints).dump());
      report_.add(id + ".q1", "q_1 = p - l_1 >= 0", pass_if(lp.q1 >= 0), "q_1 = " + std::to_string(lp.q1));
      report_.add(id + ".degree", "deg g-bar > 1", pass_if(lp.gbar_degree > 1),
                  "g-bar = " + lp.gbar.str() + " of degree " + std::to_string(lp.gbar_degree));
      ladders_.emplace(name, std::move(lp));
    } catch (const InvariantViolation& e) {
      report_.add(id, "ladder of reductions modulo the prime", Verdict::kFail, e.what());
    } catch (const GuardrailExceeded&) {
      throw;
    } catch (const Error& e) {
      report_.add(id, "ladder of reductions modulo the prime", Verdict::kInconclusive, e.what());
    }
  }
  report_.sections["ladder"] = ladders;
}

void Pipeline::run_fiber() {
  fiber_ran_ = true;
  if (slice_witness_) {
    report_.sections["fibers"] = {{"skipped", "slice exists"}};
    return;
  }
  FiberSetup setup = spec_.fiber_setup();
  Ring tags = tag_ring(setup.kernel);
  Json declared = Json::array();
  std::vector<Point> points = options_.point ? std::vector<Point>{*options_.point} : spec_.points;
  for (const auto& pt : points) {
    FiberReport r = fiber_at_point(setup, pt, options_.seed);
    declared.push_back(fiber_json(r));
    report_.add("fiber.point " + point_string(pt), "fiber over a point of Spec A",
                r.method == FiberMethod::kNotCurve ? Verdict::kFail
                : r.seed_consistent              ? Verdict::kPass
                                                 : Verdict::kInconclusive,
                fiber_summary(r));
    fibers_.push_back(std::move(r));
  }
  Json section = {{"points", declared}};

  if (spec_.plinth) {
    if (auto a = kernel_.member(spec_.plinth->generator)) {
      GenericFiberReport g = generic_fiber_check(setup, *a, spec_.bounds.samples, options_.seed);
      Json samples = Json::array();
      for (const auto& r : g.samples) samples.push_back(fiber_json(r));
      section["generic"] = {{"a", a->str()}, {"single_lines", g.all_single_lines()}, {"samples", samples}};
      report_.add("fiber.generic", "fibers over D(a) are lines", pass_if(g.all_single_lines()),
                  std::to_string(g.samples.size()) + " sampled fibers with " + a->str() + " != 0");
    }
    Json primes = Json::object();
    for (std::size_t i = 0; i < spec_.plinth->primes.size(); ++i) {
      const PrimeSpec& p = spec_.plinth->primes[i];
      if (options_.prime && *options_.prime != p.name) continue;
      auto alpha = kernel_.member(p.value);
      if (!alpha) continue;
      Polynomial avoid(tags, Rational(1));
      if (p.avoid) {
        auto av = kernel_.member(*p.avoid);
        if (av) avoid = *av;
      }
      std::vector<Point> pts = sample_points(tags, {*alpha}, avoid, spec_.bounds.samples, options_.seed + 1000 * (i + 1));
      auto ladder = ladders_.find(p.name);
      int bound = ladder != ladders_.end() ? ladder->second.gbar_degree : 0;
      Json list = Json::array();
      bool ok = true;
      for (const auto& pt : pts) {
        FiberReport r = fiber_at_point(setup, pt, options_.seed);
        list.push_back(fiber_json(r));
        ok = ok && r.method != FiberMethod::kNotCurve && r.components >= static_cast<std::size_t>(bound);
        fibers_.push_back(std::move(r));
      }
      primes[p.name] = {{"line_count_lower_bound", bound ? Json(bound) : Json(nullptr)}, {"samples", list}};
      report_.add("fiber.prime." + p.name, "fibers over V(alpha) have at least deg g-bar components",
                  bound ? pass_if(ok) : Verdict::kInconclusive,
                  std::to_string(pts.size()) + " sampled fibers over " + p.name + " = 0" +
                      (bound ? ", bound " + std::to_string(bound) : std::string(", no ladder bound")));
    }
    section["primes"] = primes;
  }
  report_.sections["fibers"] = section;
}

void Pipeline::run_verdict() {
  TrivialityVerdict v = triviality_verdict(slice_witness_, fibers_);
  Json witness = nullptr;
  if (v.witness) witness = fiber_json(fibers_[*v.witness])["point"];
  bool fpf = report_.sections["fixed_locus"].value("fixed_point_free", false);
  report_.sections["verdict"] = {{"verdict", triviality_name(v.verdict)},
                                 {"reason", v.reason},
                                 {"witness_point", witness},
                                 {"fixed_point_free", fpf}};
  report_.add("verdict.bundle", "principal bundle is trivial iff a slice exists",
              v.verdict == Triviality::kInconclusive ? Verdict::kInconclusive : Verdict::kPass,
              triviality_name(v.verdict) + ": " + v.reason);
}

AnalysisReport Pipeline::run() {
  std::set<Stage> want = options_.stages;
  if (want.empty()) return report_;
  if (want.count(Stage::kLadder)) want.insert(Stage::kChain);
  if (want.count(Stage::kVerdict)) want.insert(Stage::kFiber);
  if (want.count(Stage::kFiber) && spec_.plinth) want.insert(Stage::kChain);
  if (want.count(Stage::kFiber) && spec_.plinth && spec_.slice) want.insert(Stage::kLadder);
  want.insert(Stage::kCheck);
  for (Stage s : want) {
    report_.stages.push_back(stage_name(s));
    switch (s) {
      case Stage::kCheck: guarded("check", [&] { run_check(); }); break;
      case Stage::kChain: guarded("chain", [&] { run_chain(); }); break;
      case Stage::kLadder:
        if (spec_.slice) {
          guarded("ladder", [&] { run_ladder(); });
        } else {
          report_.add("ladder.skipped", "ladder of reductions modulo the prime", Verdict::kInconclusive, "no slice declared");
        }
        break;
      case Stage::kFiber: guarded("fiber", [&] { run_fiber(); }); break;
      case Stage::kVerdict: guarded("verdict", [&] { run_verdict(); }); break;
    }
  }
  return report_;
}

}  // namespace

std::string stage_name(Stage stage) {
  switch (stage) {
    case Stage::kCheck: return "check";
    case Stage::kChain: return "chain";
    case Stage::kLadder: return "ladder";
    case Stage::kFiber: return "fiber";
    case Stage::kVerdict: return "verdict";
  }
  return "unknown";
}

AnalysisReport run_pipeline(const DerivationSpec& spec, const PipelineOptions& options) {
  return Pipeline(spec, options).run();
}

}  // namespace lndlab
