#include "mtrace/pivotal.hpp"

#include "mtrace/errors.hpp"

namespace mtrace {

Morphism ev_l(const ModulePtr& v) {
  const FieldSpec f = v->algebra->field;
  std::size_t d = v->dim;
  Matrix m(f, 1, d * d);
  for (std::size_t i = 0; i < d; ++i)
    m.at(0, i * d + i) = Scalar::one(f);
  return {tensor(dual(v), v), unit_module(v->algebra), std::move(m)};
}

Morphism coev_l(const ModulePtr& v) {
  const FieldSpec f = v->algebra->field;
  std::size_t d = v->dim;
  Matrix m(f, d * d, 1);
  for (std::size_t i = 0; i < d; ++i)
    m.at(i * d + i, 0) = Scalar::one(f);
  return {unit_module(v->algebra), tensor(v, dual(v)), std::move(m)};
}

Morphism ev_r(const ModulePtr& v) {
  const FieldSpec f = v->algebra->field;
  std::size_t d = v->dim;
  Matrix g = v->pivot_action();
  Matrix m(f, 1, d * d);
  // ev_r(e_i (x) e^j) = e^j(g e_i) = g[j, i]
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(0, i * d + j) = g.at(j, i);
  return {tensor(v, dual(v)), unit_module(v->algebra), std::move(m)};
}

Morphism coev_r(const ModulePtr& v) {
  const FieldSpec f = v->algebra->field;
  std::size_t d = v->dim;
  Matrix ginv = v->pivot_inverse_action();
  Matrix m(f, d * d, 1);
  // coev_r(1) = sum_i e^i (x) g^{-1} e_i
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(i * d + j, 0) = ginv.at(j, i);
  return {unit_module(v->algebra), tensor(dual(v), v), std::move(m)};
}

bool snake_identities_hold(const ModulePtr& v) {
  auto idv = identity(v);
  auto idvd = identity(dual(v));
  auto el = ev_l(v), cl = coev_l(v), er = ev_r(v), cr = coev_r(v);
  // (Id_V (x) ev_l)(coev_l (x) Id_V) = Id_V
  if (compose(tensor_mor(idv, el), tensor_mor(cl, idv)).mat != idv.mat)
    return false;
  // (ev_l (x) Id_{V*})(Id_{V*} (x) coev_l) = Id_{V*}
  if (compose(tensor_mor(el, idvd), tensor_mor(idvd, cl)).mat != idvd.mat)
    return false;
  // (Id_{V*} (x) ev_r)(coev_r (x) Id_{V*}) = Id_{V*}
  if (compose(tensor_mor(idvd, er), tensor_mor(cr, idvd)).mat != idvd.mat)
    return false;
  // (ev_r (x) Id_V)(Id_V (x) coev_r) = Id_V
  if (compose(tensor_mor(er, idv), tensor_mor(idv, cr)).mat != idv.mat)
    return false;
  return true;
}

DualityData duality(const ModulePtr& v) {
  DualityData d{ev_l(v), coev_l(v), ev_r(v), coev_r(v)};
  for (const Morphism* m : {&d.ev_l, &d.coev_l, &d.ev_r, &d.coev_r})
    if (!is_morphism(*m))
      throw AxiomViolation("duality maps are intertwiners", v->name);
  if (!snake_identities_hold(v))
    throw AxiomViolation("snake identities", v->name);
  return d;
}

Morphism dual_morphism(const Morphism& f) {
  // Left formula: contraction of
  // (ev_W (x) Id_{V*})(Id_{W*} (x) f (x) Id_{V*})(Id_{W*} (x) coev_V)
  // collapses to the transpose in dual bases.
  Matrix left = f.mat.transpose();
  // Right formula: (Id_{V*} (x) ev_r_W)(Id_{V*} (x) f (x) Id_{W*})
  // (coev_r_V (x) Id_{W*}) = (G_W f G_V^{-1})^T.
  Matrix right =
      (f.cod->pivot_action() * f.mat * f.dom->pivot_inverse_action())
          .transpose();
  if (left != right)
    throw AxiomViolation("dual morphism: left and right transposes differ",
                         f.dom->name + " -> " + f.cod->name);
  return {dual(f.cod), dual(f.dom), std::move(left)};
}

Morphism gamma(const ModulePtr& v, const ModulePtr& w) {
  // (ev_W (x) Id)(Id (x) ev_V (x) Id (x) Id)(Id (x) Id (x) coev_{VW}):
  // contracting the evaluation deltas sends e^j (x) e^i to (e_i (x) e_j)^*.
  const FieldSpec f = v->algebra->field;
  std::size_t dv = v->dim, dw = w->dim;
  Matrix m(f, dv * dw, dv * dw);
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t i = 0; i < dv; ++i)
      m.at(i * dw + j, j * dv + i) = Scalar::one(f);
  Morphism out{tensor(dual(w), dual(v)), dual(tensor(v, w)), std::move(m)};
  if (!out.mat.is_invertible())
    throw AxiomViolation("gamma invertible", v->name + "," + w->name);
  return out;
}

Morphism gamma_prime(const ModulePtr& v, const ModulePtr& w) {
  // (Id (x) ev_r_V)(Id (x) Id (x) ev_r_W (x) Id)(coev_r_{VW} (x) Id (x) Id):
  // the pivot of V (x) W is G_V (x) G_W, so the contraction leaves
  // (G_V G_V^{-1})[i, p] (G_W G_W^{-1})[j, q] placed on ((p,q), (j,i)).
  const FieldSpec f = v->algebra->field;
  std::size_t dv = v->dim, dw = w->dim;
  Matrix cv = v->pivot_action() * v->pivot_inverse_action();
  Matrix cw = w->pivot_action() * w->pivot_inverse_action();
  Matrix m(f, dv * dw, dv * dw);
  for (std::size_t p = 0; p < dv; ++p)
    for (std::size_t q = 0; q < dw; ++q)
      for (std::size_t j = 0; j < dw; ++j)
        for (std::size_t i = 0; i < dv; ++i) {
          Scalar val = cv.at(i, p) * cw.at(j, q);
          if (!val.is_zero()) m.at(p * dw + q, j * dv + i) = val;
        }
  Morphism out{tensor(dual(w), dual(v)), dual(tensor(v, w)), std::move(m)};
  if (!out.mat.is_invertible())
    throw AxiomViolation("gamma' invertible", v->name + "," + w->name);
  return out;
}

Morphism phi(const ModulePtr& v) {
  // (ev_r (x) Id_{V**})(Id_V (x) coev_l(V*)): the coev_l deltas leave the
  // ev_r entries, phi[l, a] = ev_r[0, a d + l] = G[l, a].  The entries are
  // read off the pivot action directly so the V (x) V* carrier of ev_r is
  // never materialized.
  std::size_t d = v->dim;
  Matrix m = v->pivot_action();
  Morphism out{v, dual(dual(v)), std::move(m)};
  (void)d;
  if (!out.mat.is_invertible())
    throw AxiomViolation("phi invertible", v->name);
  return out;
}

Morphism ptr_r(const ModulePtr& v, const ModulePtr& x, const ModulePtr& w,
               const Morphism& f) {
  // (Id_X (x) ev_r_W)(f (x) Id_{W*})(Id_V (x) coev_l_W):
  // out[xi, vi] = sum_{j, wp} f[(xi, wp), (vi, j)] * G_W[j, wp].
  std::size_t dv = v->dim, dx = x->dim, dw = w->dim;
  if (f.mat.cols() != dv * dw || f.mat.rows() != dx * dw)
    throw ShapeMismatch("ptr_r: morphism is not shaped V(x)W -> X(x)W");
  const FieldSpec fld = v->algebra->field;
  Matrix g = w->pivot_action();
  Matrix m(fld, dx, dv);
  for (std::size_t xi = 0; xi < dx; ++xi)
    for (std::size_t vi = 0; vi < dv; ++vi) {
      Scalar acc = Scalar::zero(fld);
      for (std::size_t j = 0; j < dw; ++j)
        for (std::size_t wp = 0; wp < dw; ++wp) {
          const Scalar& fe = f.mat.at(xi * dw + wp, vi * dw + j);
          if (fe.is_zero()) continue;
          const Scalar& ge = g.at(j, wp);
          if (ge.is_zero()) continue;
          acc += fe * ge;
        }
      m.at(xi, vi) = acc;
    }
  return {v, x, std::move(m)};
}

Morphism ptr_l(const ModulePtr& v, const ModulePtr& x, const ModulePtr& w,
               const Morphism& f) {
  // (ev_l_W (x) Id_X)(Id_{W*} (x) f)(coev_r_W (x) Id_V):
  // out[xi, vi] = sum_{j, wp} G_W^{-1}[wp, j] * f[(j, xi), (wp, vi)].
  std::size_t dv = v->dim, dx = x->dim, dw = w->dim;
  if (f.mat.cols() != dw * dv || f.mat.rows() != dw * dx)
    throw ShapeMismatch("ptr_l: morphism is not shaped W(x)V -> W(x)X");
  const FieldSpec fld = v->algebra->field;
  Matrix ginv = w->pivot_inverse_action();
  Matrix m(fld, dx, dv);
  for (std::size_t xi = 0; xi < dx; ++xi)
    for (std::size_t vi = 0; vi < dv; ++vi) {
      Scalar acc = Scalar::zero(fld);
      for (std::size_t j = 0; j < dw; ++j)
        for (std::size_t wp = 0; wp < dw; ++wp) {
          const Scalar& fe = f.mat.at(j * dx + xi, wp * dv + vi);
          if (fe.is_zero()) continue;
          const Scalar& ge = ginv.at(wp, j);
          if (ge.is_zero()) continue;
          acc += fe * ge;
        }
      m.at(xi, vi) = acc;
    }
  return {v, x, std::move(m)};
}

Scalar categorical_dimension(const ModulePtr& v) {
  auto u = unit_module(v->algebra);
  return ptr_r(u, u, v, identity(v)).mat.at(0, 0);
}

}  // namespace mtrace
