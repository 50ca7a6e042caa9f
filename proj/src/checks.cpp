#include "mtrace/checks.hpp"

#include <algorithm>
#include <map>

#include "mtrace/errors.hpp"

namespace mtrace {

namespace {

// Property pairs are capped so tensor factors stay at desk scale.
constexpr std::size_t kPairDimCap = 24;

bool same_presentation(const ModulePtr& a, const ModulePtr& b) {
  if (a->algebra != b->algebra || a->dim != b->dim) return false;
  for (std::size_t i = 0; i < a->action.size(); ++i)
    if (a->action[i] != b->action[i]) return false;
  return true;
}

struct WitnessCache {
  const TraceTuple& tuple;
  std::map<const Module*, IdealWitness> cache;
  explicit WitnessCache(const TraceTuple& t) : tuple(t) {}
  const IdealWitness& get(const ModulePtr& v) {
    auto it = cache.find(v.get());
    if (it == cache.end())
      it = cache.emplace(v.get(), ideal_member(tuple, v)).first;
    return it->second;
  }
};

}  // namespace

Corpus standard_corpus(const HopfPtr& h, unsigned long seed) {
  Corpus c;
  c.algebra = h;
  c.unit = unit_module(h);
  c.regular = regular_module(h);
  auto dec = regular_decomposition(h, seed);

  // P0 = the summand with unit head, then the others in decomposition order.
  auto unit_mod = c.unit;
  std::size_t p0 = dec.summands.size();
  std::vector<SocleHead> shs;
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    shs.push_back(socle_head(dec.summands[i], seed));
    if (p0 == dec.summands.size() && shs[i].head->dim == 1 &&
        same_presentation(shs[i].head, unit_mod))
      p0 = i;
  }
  if (p0 == dec.summands.size())
    throw Error("regular module has no summand with unit head");
  std::vector<std::size_t> order = {p0};
  for (std::size_t i = 0; i < dec.summands.size(); ++i)
    if (i != p0) order.push_back(i);

  for (std::size_t k = 0; k < order.size(); ++k) {
    auto part = std::make_shared<Module>(*dec.summands[order[k]]);
    part->name = "P" + std::to_string(k);
    c.projectives.push_back(part);
    c.registry.emplace_back(part->name, part);
  }
  {
    auto soc = socle_head(c.projectives[0], seed);
    auto a = std::make_shared<Module>(*soc.socle);
    a->name = "alpha";
    c.alpha = a;
  }
  c.registry.emplace_back("triv", c.unit);
  c.registry.emplace_back("reg", c.regular);
  c.registry.emplace_back("alpha", c.alpha);
  if (h->name == "sweedler") c.registry.emplace_back("sigma", c.alpha);

  c.projectives.push_back(c.regular);
  c.pivotal_corpus.push_back(c.unit);
  if (!same_presentation(c.alpha, c.unit)) c.pivotal_corpus.push_back(c.alpha);
  for (std::size_t k = 0; k + 1 < c.projectives.size(); ++k)
    c.pivotal_corpus.push_back(c.projectives[k]);
  c.pivotal_corpus.push_back(c.regular);
  return c;
}

// ---------------------------------------------------------------------------
// Pivotal suite

std::vector<CheckResult> pivotal_suite(const Corpus& c, unsigned long seed,
                                       std::size_t n) {
  std::vector<CheckResult> out;
  Sampler sampler(seed);
  const auto& mods = c.pivotal_corpus;
  const FieldSpec fld = c.algebra->field;

  {
    CheckResult r{"pivotal.snake_identities", true, ""};
    for (const auto& v : mods) {
      try {
        duality(v);
      } catch (const Error& e) {
        r.pass = false;
        r.detail = v->name + ": " + e.what();
        break;
      }
    }
    out.push_back(r);
  }

  // Hom bases between corpus modules, computed once.
  std::map<std::pair<const Module*, const Module*>, std::vector<Morphism>>
      homs;
  auto hom = [&](const ModulePtr& a, const ModulePtr& b) {
    auto key = std::make_pair(a.get(), b.get());
    auto it = homs.find(key);
    if (it == homs.end()) it = homs.emplace(key, hom_space(a, b)).first;
    return it->second;
  };

  {
    CheckResult r{"pivotal.dual_morphism_left_right", true, ""};
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 4 * n && done < n; ++trial) {
      const auto& a = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& b = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& basis = hom(a, b);
      if (basis.empty()) continue;
      Morphism f = sampler.random_hom(basis);
      try {
        dual_morphism(f);  // asserts left = right internally
      } catch (const Error& e) {
        r.pass = false;
        r.detail = e.what();
        break;
      }
      ++done;
    }
    r.detail = r.pass ? std::to_string(done) + " samples" : r.detail;
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.dual_morphism_contravariant", true, ""};
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 4 * n && done < n / 2 + 1; ++trial) {
      const auto& a = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& b = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& cc = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& fb = hom(b, cc);
      const auto& gb = hom(a, b);
      if (fb.empty() || gb.empty()) continue;
      Morphism f = sampler.random_hom(fb);
      Morphism g = sampler.random_hom(gb);
      Morphism lhs = dual_morphism(compose(f, g));
      Morphism rhs = compose(dual_morphism(g), dual_morphism(f));
      if (lhs.mat != rhs.mat) {
        r.pass = false;
        r.detail = "(f g)* != g* f*";
        break;
      }
      ++done;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.gamma_equals_gamma_prime", true, ""};
    for (const auto& v : mods) {
      for (const auto& w : mods) {
        try {
          Morphism g = gamma(v, w);
          Morphism gp = gamma_prime(v, w);
          if (g.mat != gp.mat) {
            r.pass = false;
            r.detail = "gamma != gamma' at (" + v->name + "," + w->name + ")";
          }
        } catch (const Error& e) {
          r.pass = false;
          r.detail = e.what();
        }
        if (!r.pass) break;
      }
      if (!r.pass) break;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.phi_naturality", true, ""};
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 4 * n && done < n; ++trial) {
      const auto& a = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& b = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& basis = hom(a, b);
      if (basis.empty()) continue;
      Morphism f = sampler.random_hom(basis);
      Morphism fss = dual_morphism(dual_morphism(f));
      if (phi(b).mat * f.mat != fss.mat * phi(a).mat) {
        r.pass = false;
        r.detail = "phi_W f != f** phi_V for " + a->name + " -> " + b->name;
        break;
      }
      ++done;
    }
    r.detail = r.pass ? std::to_string(done) + " samples" : r.detail;
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.phi_monoidal", true, ""};
    for (const auto& v : mods) {
      for (const auto& w : mods) {
        if (v->dim * w->dim > kPairDimCap * 4) continue;
        Morphism g = gamma(v, w);
        Morphism gsd = dual_morphism(g);  // (V (x) W)** -> (W* (x) V*)*
        Morphism gdd = gamma(dual(w), dual(v));  // V** (x) W** -> (W* (x) V*)*
        Matrix lhs = phi(tensor(v, w)).mat;
        Matrix rhs = gsd.mat.inverse() * gdd.mat *
                     kron(phi(v).mat, phi(w).mat);
        if (lhs != rhs) {
          r.pass = false;
          r.detail = "phi not monoidal at (" + v->name + "," + w->name + ")";
          break;
        }
      }
      if (!r.pass) break;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.partial_trace_scaling", true, ""};
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 4 * n && done < n; ++trial) {
      const auto& w = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& a = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& b = mods[sampler.small_int(0, mods.size() - 1)];
      if (a->dim * w->dim > kPairDimCap || b->dim * w->dim > kPairDimCap)
        continue;
      const auto& basis = hom(a, b);
      if (basis.empty()) continue;
      Morphism f = sampler.random_hom(basis);
      Scalar d = categorical_dimension(w);
      Morphism fw = tensor_mor(f, identity(w));
      Morphism tr = ptr_r(a, b, w, fw);
      if (tr.mat != f.mat * d) {
        r.pass = false;
        r.detail = "tr_r(f (x) Id_W) != d(W) f";
        break;
      }
      ++done;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"pivotal.partial_trace_nesting", true, ""};
    std::size_t done = 0;
    for (std::size_t trial = 0; trial < 6 * n && done < n / 2 + 1; ++trial) {
      const auto& u = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& w = mods[sampler.small_int(0, mods.size() - 1)];
      const auto& a = mods[sampler.small_int(0, mods.size() - 1)];
      if (a->dim * u->dim * w->dim > kPairDimCap) continue;
      auto auw = tensor(tensor(a, u), w);
      const auto& basis = hom(auw, auw);
      if (basis.empty()) continue;
      Morphism f = sampler.random_hom(basis);
      Morphism nested =
          ptr_r(a, a, tensor(u, w), f);
      Morphism inner = ptr_r(tensor(a, u), tensor(a, u), w, f);
      Morphism outer = ptr_r(a, a, u, inner);
      if (nested.mat != outer.mat) {
        r.pass = false;
        r.detail = "tr_r^{U(x)W} != tr_r^U tr_r^W";
        break;
      }
      ++done;
    }
    out.push_back(r);
  }

  (void)fld;
  return out;
}

// ---------------------------------------------------------------------------
// m-trace suite

std::vector<CheckResult> mtrace_suite(const Corpus& c, unsigned long seed,
                                      std::size_t n) {
  std::vector<CheckResult> out;
  Sampler sampler(seed);
  const FieldSpec fld = c.algebra->field;

  TraceTuple tuple;
  {
    CheckResult r{"mtrace.tuple_validates", true, ""};
    try {
      tuple = projective_trace_tuple(c.algebra, seed);
      r.detail = "P = " + tuple.P->name + ", dim End(P) = " +
                 std::to_string(tuple.p_report.dim_end);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
      out.push_back(r);
      return out;
    }
    out.push_back(r);
  }
  WitnessCache witnesses(tuple);

  {
    CheckResult r{"mtrace.projectives_in_ideal", true, ""};
    for (const auto& q : c.projectives) {
      const auto& w = witnesses.get(q);
      if (!w.in_ideal()) {
        r.pass = false;
        r.detail = q->name + " has no witness";
        break;
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.two_formulas_agree", true, ""};
    std::size_t done = 0;
    try {
      for (const auto& q : c.projectives) {
        auto av = tensor(tuple.alpha, q);
        auto bv = tensor(tuple.beta, q);
        auto basis = hom_space(av, bv);
        if (basis.empty()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          Morphism f = sampler.random_hom(basis);
          mtrace_eval(tuple, witnesses.get(q), f);  // asserts agreement
          ++done;
        }
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.partial_trace_property", true, ""};
    std::size_t done = 0;
    for (const auto& u : c.projectives) {
      for (const auto& w : c.pivotal_corpus) {
        if (u->dim * w->dim > kPairDimCap) continue;
        auto uw = tensor(u, w);
        const auto& wu = witnesses.get(u);
        if (!wu.in_ideal()) continue;
        // Tensor-closure witness: s_{U(x)W} = s_U (x) Id_W.
        IdealWitness wuw;
        wuw.module = uw;
        Matrix idw = Matrix::identity(fld, w->dim);
        wuw.s = Morphism{tensor(tuple.P, uw), tensor(tuple.alpha, uw),
                         kron(wu.s->mat, idw)};
        wuw.t = Morphism{tensor(tuple.beta, uw), tensor(tuple.P, uw),
                         kron(wu.t->mat, idw)};
        auto auw = tensor(tensor(tuple.alpha, u), w);
        auto buw = tensor(tensor(tuple.beta, u), w);
        auto basis = hom_space(auw, buw);
        if (basis.empty()) continue;
        Morphism f = sampler.random_hom(basis);
        Scalar lhs = trace_value(tuple, wuw, f);
        Morphism trw =
            ptr_r(tensor(tuple.alpha, u), tensor(tuple.beta, u), w, f);
        Scalar rhs = trace_value(tuple, wu, trw);
        ++done;
        if (lhs != rhs) {
          r.pass = false;
          r.detail = "t_{U(x)W} != t_U tr_r^W at (" + u->name + "," + w->name +
                     ")";
          break;
        }
      }
      if (!r.pass) break;
    }
    if (r.pass) r.detail = std::to_string(done) + " pairs";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.cyclicity", true, ""};
    std::size_t done = 0;
    Matrix id_a = Matrix::identity(fld, tuple.alpha->dim);
    Matrix id_b = Matrix::identity(fld, tuple.beta->dim);
    for (std::size_t trial = 0; trial < 6 * n && done < n; ++trial) {
      const auto& u = c.projectives[sampler.small_int(
          0, c.projectives.size() - 1)];
      const auto& v = c.projectives[sampler.small_int(
          0, c.projectives.size() - 1)];
      if (u->dim > kPairDimCap / 2 || v->dim > kPairDimCap / 2) continue;
      auto gs = hom_space(u, v);
      auto fs = hom_space(tensor(tuple.alpha, v), tensor(tuple.beta, u));
      if (gs.empty() || fs.empty()) continue;
      Morphism g = sampler.random_hom(gs);
      Morphism f = sampler.random_hom(fs);
      Morphism lhs{tensor(tuple.alpha, v), tensor(tuple.beta, v),
                   kron(id_b, g.mat) * f.mat};
      Morphism rhs{tensor(tuple.alpha, u), tensor(tuple.beta, u),
                   f.mat * kron(id_a, g.mat)};
      ++done;
      if (trace_value(tuple, witnesses.get(v), lhs) !=
          trace_value(tuple, witnesses.get(u), rhs)) {
        r.pass = false;
        r.detail = "cyclicity failed at (" + u->name + "," + v->name + ")";
        break;
      }
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.choice_independence", true, ""};
    for (const auto& q : c.projectives) {
      if (q->dim > kPairDimCap / 2) continue;
      auto basis = hom_space(tensor(tuple.alpha, q), tensor(tuple.beta, q));
      if (basis.empty()) continue;
      Morphism f = sampler.random_hom(basis);
      auto rep = uniqueness_probe(tuple, q, f, 10, sampler);
      if (!rep.choice_independent) {
        r.pass = false;
        r.detail = "witness perturbation changed the value at " + q->name;
        break;
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.bracket_lemma", true, ""};
    auto ends = hom_space(tuple.P, tuple.P);
    for (std::size_t k = 0; k < n; ++k) {
      Morphism f = sampler.random_hom(ends);
      Scalar br = bracket(tuple, f);
      Morphism epsf = compose(tuple.eps, f);
      Morphism feta = compose(f, tuple.eta);
      if (epsf.mat != tuple.eps.mat * br || feta.mat != tuple.eta.mat * br ||
          bracket_eps(tuple, epsf) != br || bracket_eta(tuple, feta) != br) {
        r.pass = false;
        r.detail = "eps f = <f> eps / f eta = <f> eta failed";
        break;
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.normalization", true, ""};
    try {
      auto wp = witnesses.get(tuple.P);
      Scalar norm = trace_value(tuple, wp, eta_tensor_eps(tuple));
      if (!norm.is_one()) {
        r.pass = false;
        r.detail = "t_P(eta (x) eps) = " + norm.str();
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.cut_identities", true, ""};
    std::size_t done = 0;
    for (const auto& q : c.projectives) {
      if (q->dim > kPairDimCap / 2) continue;
      const auto& w = witnesses.get(q);
      auto pv = tensor(tuple.P, q);
      auto av = tensor(tuple.alpha, q);
      auto bv = tensor(tuple.beta, q);
      auto fs = hom_space(pv, bv);
      auto gs = hom_space(av, pv);
      auto hs = hom_space(pv, pv);
      for (std::size_t k = 0; k < n / c.projectives.size() + 1; ++k) {
        if (!fs.empty() && !cut_identity_f(tuple, w, sampler.random_hom(fs)))
          r.pass = false;
        if (!gs.empty() && !cut_identity_g(tuple, w, sampler.random_hom(gs)))
          r.pass = false;
        if (!hs.empty() && !cut_identity_h(tuple, w, sampler.random_hom(hs)))
          r.pass = false;
        ++done;
      }
      if (!r.pass) {
        r.detail = "cut identity failed at " + q->name;
        break;
      }
    }
    if (r.pass) r.detail = std::to_string(done) + " sample triples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.nondegenerate_pairing", true, ""};
    for (std::size_t i = 0; i + 1 < c.projectives.size(); ++i)
      for (std::size_t j = 0; j + 1 < c.projectives.size(); ++j) {
        auto rep = nondeg_pairing(tuple, c.projectives[i], c.projectives[j]);
        if (!rep.dims_equal || !rep.full_rank) {
          r.pass = false;
          r.detail = "pairing degenerate at (P" + std::to_string(i) + ",P" +
                     std::to_string(j) + ")";
        }
      }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.compatibility", true, ""};
    std::size_t done = 0;
    const auto& p0 = c.projectives[0];
    auto vaw = tensor(tensor(p0, tuple.alpha), p0);
    auto vbw = tensor(tensor(p0, tuple.beta), p0);
    auto basis = hom_space(vaw, vbw);
    for (std::size_t k = 0; k < n && !basis.empty(); ++k) {
      Morphism f = sampler.random_hom(basis);
      if (!compat_check(tuple, p0, p0, f)) {
        r.pass = false;
        r.detail = "left/right compatibility failed";
        break;
      }
      ++done;
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.ideal_closure", true, ""};
    // Tensor closure: s_V (x) Id_W is a witness for V (x) W.
    for (const auto& v : c.projectives) {
      for (const auto& w : c.pivotal_corpus) {
        if (v->dim * w->dim > kPairDimCap) continue;
        const auto& wv = witnesses.get(v);
        Matrix idw = Matrix::identity(fld, w->dim);
        Morphism s{tensor(tuple.P, tensor(v, w)),
                   tensor(tuple.alpha, tensor(v, w)),
                   kron(wv.s->mat, idw)};
        Morphism t{tensor(tuple.beta, tensor(v, w)),
                   tensor(tuple.P, tensor(v, w)), kron(wv.t->mat, idw)};
        Matrix eta_id =
            kron(tuple.eta.mat, Matrix::identity(fld, v->dim * w->dim));
        Matrix eps_id =
            kron(tuple.eps.mat, Matrix::identity(fld, v->dim * w->dim));
        bool ok = is_morphism(s) && is_morphism(t) &&
                  s.mat * eta_id ==
                      Matrix::identity(fld, tuple.alpha->dim * v->dim * w->dim) &&
                  eps_id * t.mat ==
                      Matrix::identity(fld, tuple.beta->dim * v->dim * w->dim);
        if (!ok) {
          r.pass = false;
          r.detail = "tensor closure failed at (" + v->name + "," + w->name +
                     ")";
          break;
        }
      }
      if (!r.pass) break;
    }
    // Retract closure: each regular summand is a retract of the regular
    // module; transport its witness.
    if (r.pass) {
      auto dec = regular_decomposition(c.algebra, seed);
      const auto& wreg = witnesses.get(c.regular);
      for (std::size_t i = 0; i < dec.summands.size(); ++i) {
        const auto& part = dec.summands[i];
        Matrix inj = dec.injections[i].mat;
        Matrix proj = dec.projections[i].mat;
        Matrix id_a = Matrix::identity(fld, tuple.alpha->dim);
        Matrix id_p = Matrix::identity(fld, tuple.P->dim);
        Matrix s = kron(id_a, proj) * wreg.s->mat * kron(id_p, inj);
        Matrix eta_id = kron(tuple.eta.mat, Matrix::identity(fld, part->dim));
        if (s * eta_id !=
            Matrix::identity(fld, tuple.alpha->dim * part->dim)) {
          r.pass = false;
          r.detail = "retract closure failed at summand " + std::to_string(i);
          break;
        }
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.unimodularity_witness", true, ""};
    bool socle_is_unit = same_presentation(tuple.alpha, c.unit);
    if (socle_is_unit) {
      r.detail = "unimodular: socle(P0) = 1";
    } else {
      // Non-unimodular: Hom(1, P0) must vanish, so a (1,1)-tuple on P0 is
      // rejected.
      try {
        make_trace_tuple(tuple.P, c.unit, c.unit);
        r.pass = false;
        r.detail = "expected HomNotLine for the (1,1) tuple";
      } catch (const HomNotLine& e) {
        r.detail = std::string("non-unimodular: ") + e.what();
      } catch (const Error& e) {
        r.pass = false;
        r.detail = e.what();
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.toy_agreement", true, ""};
    std::size_t done = 0;
    try {
      auto toy = toy_trace_tuple(c.unit);
      for (const auto& v : c.pivotal_corpus) {
        if (v->dim > kPairDimCap / 2) continue;
        auto w = ideal_member(toy, v);
        auto basis = hom_space(tensor(c.unit, v), tensor(c.unit, v));
        for (std::size_t k = 0; k < n / 4 + 1 && !basis.empty(); ++k) {
          Morphism f = sampler.random_hom(basis);
          Scalar via_toy = toy_trace(c.unit, v, f);
          Scalar via_tuple = trace_value(toy, w, f);
          ++done;
          if (via_toy != via_tuple) {
            r.pass = false;
            r.detail = "toy trace disagrees at " + v->name;
            break;
          }
        }
        if (!r.pass) break;
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.double_dual", true, ""};
    std::size_t done = 0;
    try {
      for (const auto& q : c.projectives) {
        if (q->dim > kPairDimCap / 4) continue;
        const auto& w = witnesses.get(q);
        auto basis = hom_space(tensor(tuple.alpha, q), tensor(tuple.beta, q));
        for (std::size_t k = 0; k < 3 && !basis.empty(); ++k) {
          Morphism f = sampler.random_hom(basis);
          Scalar direct = trace_value(tuple, w, f);
          Scalar doubled = double_dual_trace_eval(tuple, q, f);
          ++done;
          if (direct != doubled) {
            r.pass = false;
            r.detail = "double dualization changed a value at " + q->name;
            break;
          }
        }
        if (!r.pass) break;
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  {
    CheckResult r{"mtrace.pushforward", true, ""};
    std::size_t done = 0;
    try {
      // Composite law through trace values, with (a3, b3) = (alpha, beta):
      // searching small corpus modules for nonzero linking homs.
      std::vector<ModulePtr> smalls;
      for (const auto& m : c.pivotal_corpus)
        if (m->dim <= 2) smalls.push_back(m);
      bool found = false;
      for (const auto& a2 : smalls) {
        for (const auto& b2 : smalls) {
          auto h_space = hom_space(tensor(dual(a2), b2),
                                   tensor(dual(tuple.alpha), tuple.beta));
          auto hp_space = hom_space(tensor(dual(tuple.alpha), tuple.beta),
                                    tensor(dual(a2), b2));
          if (h_space.empty() || hp_space.empty()) continue;
          found = true;
          for (std::size_t k = 0; k < n / 5 + 1; ++k) {
            Morphism h = sampler.random_hom(h_space);
            Morphism hp = sampler.random_hom(hp_space);
            const auto& q = c.projectives[0];
            const auto& wq = witnesses.get(q);
            auto fs = hom_space(tensor(tuple.alpha, q), tensor(tuple.beta, q));
            if (fs.empty()) break;
            Morphism f = sampler.random_hom(fs);
            // ((h hp)_* t)(f) vs (hp_* (h_* t))(f) = t(h_*(hp_*(f))).
            Morphism hhp = compose(h, hp);
            Morphism pushed_once =
                push_morphism(tuple.alpha, tuple.beta, tuple.alpha, tuple.beta,
                              hhp, q, f);
            Scalar lhs = trace_value(tuple, wq, pushed_once);
            Morphism inner = push_morphism(a2, b2, tuple.alpha, tuple.beta,
                                           hp, q, f);
            Morphism outer = push_morphism(tuple.alpha, tuple.beta, a2, b2, h,
                                           q, inner);
            Scalar rhs = trace_value(tuple, wq, outer);
            ++done;
            if (lhs != rhs) {
              r.pass = false;
              r.detail = "(h h')_* t != h_*(h'_* t)";
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      // Identity pushforward: h = Id gives back t.
      if (r.pass) {
        const auto& q = c.projectives[0];
        const auto& wq = witnesses.get(q);
        auto fs = hom_space(tensor(tuple.alpha, q), tensor(tuple.beta, q));
        if (!fs.empty()) {
          Morphism f = sampler.random_hom(fs);
          auto ab = tensor(dual(tuple.alpha), tuple.beta);
          Morphism idh = identity(ab);
          Morphism pushed = push_morphism(tuple.alpha, tuple.beta, tuple.alpha,
                                          tuple.beta, idh, q, f);
          if (trace_value(tuple, wq, pushed) != trace_value(tuple, wq, f)) {
            r.pass = false;
            r.detail = "Id_* t != t";
          }
          ++done;
        }
      }
      // Bijection round trip (alpha, beta) -> (1, alpha* (x) beta) -> back,
      // both arrows pushed with the identity of alpha* (x) beta.
      if (r.pass) {
        const auto& q = c.projectives[0];
        const auto& wq = witnesses.get(q);
        auto ab = tensor(dual(tuple.alpha), tuple.beta);
        auto fs = hom_space(tensor(tuple.alpha, q), tensor(tuple.beta, q));
        if (!fs.empty()) {
          Morphism f = sampler.random_hom(fs);
          Morphism idh = identity(ab);
          // Forward: u = (Id)_* t as a (1, ab)-trace; u(g) = t(push(g)).
          // Backward: t2(f) = u(push'(f)); the composite must be t.
          Morphism push_f = push_morphism(c.unit, ab, tuple.alpha, tuple.beta,
                                          idh, q, f);
          Morphism push_back = push_morphism(tuple.alpha, tuple.beta, c.unit,
                                             ab, idh, q, push_f);
          Scalar round = trace_value(tuple, wq, push_back);
          Scalar direct = trace_value(tuple, wq, f);
          ++done;
          if (round != direct) {
            r.pass = false;
            r.detail = "bijection round trip is not the identity";
          }
        }
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    if (r.pass) r.detail = std::to_string(done) + " samples";
    out.push_back(r);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Twisted Calabi-Yau suite

std::vector<CheckResult> cy_suite(const Corpus& c, unsigned long seed,
                                  std::size_t n) {
  std::vector<CheckResult> out;
  Sampler sampler(seed);

  TraceTuple tuple;
  try {
    tuple = projective_trace_tuple(c.algebra, seed);
  } catch (const Error& e) {
    out.push_back({"cy.tuple", false, e.what()});
    return out;
  }

  {
    CheckResult r{"cy.pairs", true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i + 1 < c.projectives.size(); ++i)
      for (std::size_t j = 0; j + 1 < c.projectives.size(); ++j) {
        auto rep = twisted_cy_check(tuple, c.projectives[i], c.projectives[j],
                                    n / 4 + 1, sampler);
        ++pairs;
        if (!rep.dims_equal || !rep.full_rank || !rep.cyclicity_ok) {
          r.pass = false;
          r.detail = "failed at (P" + std::to_string(i) + ",P" +
                     std::to_string(j) + ")";
        }
      }
    if (r.pass) r.detail = std::to_string(pairs) + " pairs";
    out.push_back(r);
  }

  {
    CheckResult r{"cy.twist_is_nontrivial_iff_nonunimodular", true, ""};
    bool unimodular = same_presentation(tuple.alpha, c.unit);
    r.detail = unimodular ? "F_alpha = Id (Calabi-Yau)"
                          : "F_alpha != Id (twisted)";
    out.push_back(r);
  }

  {
    CheckResult r{"cy.frobenius_extension", true, ""};
    try {
      auto rep = frobenius_extension_check(c.algebra, n / 2 + 1, sampler, seed);
      if (!rep.alpha_q_iso_q || !rep.pairing_full_rank ||
          !rep.twisted_symmetry_ok) {
        r.pass = false;
        r.detail = "End(Q) dim " + std::to_string(rep.end_dim) +
                   (rep.alpha_q_iso_q ? "" : ", alpha(x)Q != Q") +
                   (rep.pairing_full_rank ? "" : ", degenerate pairing") +
                   (rep.twisted_symmetry_ok ? "" : ", symmetry failed");
      } else {
        r.detail = "End(Q) dim " + std::to_string(rep.end_dim);
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(r);
  }

  return out;
}

std::vector<CheckResult> run_suite(const Corpus& c, const std::string& suite,
                                   unsigned long seed, std::size_t n) {
  std::vector<CheckResult> out;
  if (suite == "pivotal" || suite == "all") {
    auto r = pivotal_suite(c, seed, n);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "mtrace" || suite == "all") {
    auto r = mtrace_suite(c, seed, n);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "cy" || suite == "all") {
    auto r = cy_suite(c, seed, n);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty()) throw SchemaError("unknown suite: " + suite);
  return out;
}

}  // namespace mtrace
