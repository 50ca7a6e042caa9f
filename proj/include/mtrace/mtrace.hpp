#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mtrace/pivotal.hpp"
#include "mtrace/rng.hpp"

namespace mtrace {

// (P, alpha, beta, eta, eps): P absolutely indecomposable and end-nilpotent,
// Hom(alpha, P) and Hom(P, beta) one-dimensional with generators eta, eps.
struct TraceTuple {
  ModulePtr P, alpha, beta;
  Morphism eta;  // alpha -> P
  Morphism eps;  // P -> beta
  // Validation evidence.
  AbsIndecReport p_report;
  std::size_t dim_hom_alpha_P = 0;
  std::size_t dim_hom_P_beta = 0;
  // Basis of J(End(P)) as matrices (for the bracket functionals).
  std::vector<Matrix> end_radical;

  bool beta_is_unit() const;
  bool alpha_is_unit() const;
};

// Validates a tuple; eta/eps default to the canonical hom-space generators
// when omitted.  Throws NotAbsIndec, HomNotLine, ZeroMorphism.
TraceTuple make_trace_tuple(const ModulePtr& p, const ModulePtr& alpha,
                            const ModulePtr& beta,
                            std::optional<Morphism> eta = std::nullopt,
                            std::optional<Morphism> eps = std::nullopt);

// The tuple of the projective cover of the unit: alpha its socle, beta = 1,
// eta/eps the canonical inclusion/projection.
TraceTuple projective_trace_tuple(const HopfPtr& h, unsigned long seed = 1);

// (S, S, S, Id, Id) for an absolutely irreducible S.
TraceTuple toy_trace_tuple(const ModulePtr& s);

// <f> for f: P -> P: the scalar with f - <f> Id in J(End(P)), by solving
// against an explicit radical basis.
Scalar bracket(const TraceTuple& t, const Morphism& f);
// g = <g>_eta eta for g: alpha -> P, and h = <h>_eps eps for h: P -> beta.
Scalar bracket_eta(const TraceTuple& t, const Morphism& g);
Scalar bracket_eps(const TraceTuple& t, const Morphism& h);

// Witness data for membership of V in the right ideals: s with
// s (eta (x) Id_V) = Id, t with (eps (x) Id_V) t = Id, together with the
// kernels of the two affine systems (the non-uniqueness of the choices).
struct IdealWitness {
  ModulePtr module;
  std::optional<Morphism> s;  // P (x) V -> alpha (x) V
  std::optional<Morphism> t;  // beta (x) V -> P (x) V
  std::vector<Morphism> s_kernel;
  std::vector<Morphism> t_kernel;
  bool in_I_alpha() const { return s.has_value(); }
  bool in_I_beta() const { return t.has_value(); }
  bool in_ideal() const { return s && t; }
};
IdealWitness ideal_member(const TraceTuple& t, const ModulePtr& v);
// Left-sided version: s: V (x) P -> V (x) alpha with s (Id (x) eta) = Id, etc.
IdealWitness ideal_member_left(const TraceTuple& t, const ModulePtr& v);

// The m-trace of f: alpha (x) V -> beta (x) V through both formulas
//   <tr_r^V(t_V f)>_eta  and  <tr_r^V(f s_V)>_eps,
// which are asserted equal.
struct TraceReport {
  Scalar value;
  Scalar via_s;
  Scalar via_t;
  std::map<std::string, bool> checks;
};
TraceReport mtrace_eval(const TraceTuple& t, const IdealWitness& w,
                        const Morphism& f);
TraceReport mtrace_eval(const TraceTuple& t, const ModulePtr& v,
                        const Morphism& f);
Scalar trace_value(const TraceTuple& t, const IdealWitness& w,
                   const Morphism& f);

// Left trace of f: V (x) alpha -> V (x) beta through the left witnesses.
Scalar left_trace_value(const TraceTuple& t, const IdealWitness& wl,
                        const Morphism& f);

// The three cut identities for V in the ideal:
//   t_V(f (eta (x) Id)) = <tr_r^V f>_eps          f: P (x) V -> beta (x) V
//   t_V((eps (x) Id) g) = <tr_r^V g>_eta          g: alpha (x) V -> P (x) V
//   t_V((eps (x) Id) h (eta (x) Id)) = <tr_r^V h> h: P (x) V -> P (x) V
bool cut_identity_f(const TraceTuple& t, const IdealWitness& w,
                    const Morphism& f);
bool cut_identity_g(const TraceTuple& t, const IdealWitness& w,
                    const Morphism& g);
bool cut_identity_h(const TraceTuple& t, const IdealWitness& w,
                    const Morphism& h);

// Toy trace <tr_r^V(f)> for an absolutely irreducible S and
// f: S (x) V -> S (x) V.  Throws NotAbsIrred.
Scalar toy_trace(const ModulePtr& s, const ModulePtr& v, const Morphism& f);

// Dual trace: for V with V* in the ideal and f: V (x) beta* -> V (x) alpha*,
//   t*_V(f) = t_{V*} of f* transported through gamma and phi.
Scalar dual_trace_eval(const TraceTuple& t, const ModulePtr& v,
                       const Morphism& f);
// Dual of the dual (a right trace again); used to confirm that dualizing
// twice returns the original values.
Scalar double_dual_trace_eval(const TraceTuple& t, const ModulePtr& v,
                              const Morphism& f);

// h_*(f) for h: a2* (x) b2 -> a1* (x) b1 and f: a2 (x) V -> b2 (x) V:
//   (ev_r_{a1} (x) Id)(Id (x) h (x) Id)(Id (x) Id (x) f)(Id (x) coev_r_{a2} (x) Id).
Morphism push_morphism(const ModulePtr& a1, const ModulePtr& b1,
                       const ModulePtr& a2, const ModulePtr& b2,
                       const Morphism& h, const ModulePtr& v,
                       const Morphism& f);

// Compatibility: t^r_W(tr_l^V f) = t^l_V(tr_r^W f) for
// f: V (x) alpha (x) W -> V (x) beta (x) W.
bool compat_check(const TraceTuple& t, const ModulePtr& v, const ModulePtr& w,
                  const Morphism& f);

// Gram matrix of (g, f) -> t_Q(g f) on Hom(V, beta (x) Q) x Hom(alpha (x) Q, V).
struct PairingReport {
  std::size_t dim_left = 0;   // dim Hom(V, beta (x) Q)
  std::size_t dim_right = 0;  // dim Hom(alpha (x) Q, V)
  Matrix gram;
  bool dims_equal = false;
  bool full_rank = false;
};
PairingReport nondeg_pairing(const TraceTuple& t, const ModulePtr& q,
                             const ModulePtr& v);

// Choice-independence of the trace under kernel perturbations of the
// witnesses, the normalization t_P(eta (x) eps) = 1 (beta = 1) or
// t_P(eps (x) eta) = 1 (alpha = 1), and the scaling identity against an
// alternative trace.
using TraceFunction =
    std::function<Scalar(const ModulePtr&, const Morphism&)>;
struct UniquenessReport {
  bool choice_independent = true;
  std::size_t perturbations = 0;
  std::optional<Scalar> normalization;  // set when alpha or beta is the unit
  std::optional<Scalar> alt_scale;      // t'_P(eta (x) eps)
  bool alt_proportional = true;
};
UniquenessReport uniqueness_probe(const TraceTuple& t, const ModulePtr& v,
                                  const Morphism& f, std::size_t n,
                                  Sampler& sampler,
                                  const TraceFunction* alternative = nullptr);

// The morphism eta (x) eps: alpha (x) P -> P (x) beta, the normalization
// argument of the uniqueness theorem (requires beta = 1 for the shapes to
// align with Hom(alpha (x) P, beta (x) P)).
Morphism eta_tensor_eps(const TraceTuple& t);
Morphism eps_tensor_eta(const TraceTuple& t);  // alpha = 1 counterpart

// Twisted Calabi-Yau data on a pair of projectives U, V with the functors
// alpha (x) - and beta (x) -.
struct CyReport {
  std::size_t dim_fu_v = 0;  // dim Hom(alpha (x) U, V)
  std::size_t dim_v_gu = 0;  // dim Hom(V, beta (x) U)
  bool dims_equal = false;
  bool full_rank = false;
  bool cyclicity_ok = true;
  std::size_t cyclicity_samples = 0;
};
CyReport twisted_cy_check(const TraceTuple& t, const ModulePtr& u,
                          const ModulePtr& v, std::size_t n, Sampler& sampler);

// Frobenius-extension structure on End(Q), Q the direct sum of the distinct
// indecomposable projectives: tau(a) = t_Q(a w) for a chosen isomorphism
// w: alpha (x) Q -> Q; the pairing (a, b) -> tau(a b) must be non-degenerate
// and tau(a b) = tau(b F(a)) for the induced algebra endomorphism
// F(a) = w (Id (x) a) w^{-1}.
struct FrobeniusReport {
  std::size_t end_dim = 0;
  bool alpha_q_iso_q = false;
  bool pairing_full_rank = false;
  bool twisted_symmetry_ok = true;
  std::size_t symmetry_samples = 0;
};
FrobeniusReport frobenius_extension_check(const HopfPtr& h, std::size_t n,
                                          Sampler& sampler,
                                          unsigned long seed = 1);

}  // namespace mtrace
