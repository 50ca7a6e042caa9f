#pragma once

#include "mtrace/module.hpp"

namespace mtrace {

// The pivotal layer.  The left duality pairs V* with V by plain evaluation;
// the right duality inserts the pivot on the evaluation side and its inverse
// on the coevaluation side:
//   ev_l(f (x) v) = f(v)            coev_l(1) = sum_i e_i (x) e^i
//   ev_r(v (x) f) = f(g v)          coev_r(1) = sum_i e^i (x) g^{-1} e_i
// The snake identities and the compatibility of the two dualities are
// executable checks, not assumptions.

Morphism ev_l(const ModulePtr& v);    // dual(V) (x) V -> 1
Morphism coev_l(const ModulePtr& v);  // 1 -> V (x) dual(V)
Morphism ev_r(const ModulePtr& v);    // V (x) dual(V) -> 1
Morphism coev_r(const ModulePtr& v);  // 1 -> dual(V) (x) V

struct DualityData {
  Morphism ev_l, coev_l, ev_r, coev_r;
};

// All four structure maps, verified to be intertwiners satisfying both snake
// pairs exactly; throws AxiomViolation otherwise.
DualityData duality(const ModulePtr& v);

// Left snakes: (Id (x) ev_l)(coev_l (x) Id) = Id_V and
// (ev_l (x) Id)(Id (x) coev_l) = Id_{V*}; right snakes analogous.
bool snake_identities_hold(const ModulePtr& v);

// The transpose morphism W* -> V* of f: V -> W, computed from both the
// left-duality and the right-duality formula; the two are asserted equal
// (pivotal compatibility).
Morphism dual_morphism(const Morphism& f);

// gamma_{V,W}: W* (x) V* -> (V (x) W)* and its right-duality counterpart.
// Both are contractions of their defining composites (evaluated without
// materializing the intermediate objects); invertibility is verified.
Morphism gamma(const ModulePtr& v, const ModulePtr& w);
Morphism gamma_prime(const ModulePtr& v, const ModulePtr& w);

// phi_V = (ev_r (x) Id)(Id (x) coev_l(V*)): V -> V**.  The double dual is a
// genuinely materialized module; phi is an honest matrix.
Morphism phi(const ModulePtr& v);

// Right partial trace of f: V (x) W -> X (x) W over W, and the left partial
// trace of f: W (x) V -> W (x) X.  The W factor dimensions are supplied by
// the caller through the explicit modules.
Morphism ptr_r(const ModulePtr& v, const ModulePtr& x, const ModulePtr& w,
               const Morphism& f);
Morphism ptr_l(const ModulePtr& v, const ModulePtr& x, const ModulePtr& w,
               const Morphism& f);

// tr_r^V(Id_V) as a scalar (the right categorical dimension).
Scalar categorical_dimension(const ModulePtr& v);

}  // namespace mtrace
