#include "mtrace/hopf.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "mtrace/errors.hpp"
#include "mtrace/json_io.hpp"
#include "mtrace/qpoly.hpp"

namespace mtrace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// AlgebraOnBasis

std::vector<Scalar> AlgebraOnBasis::multiply(
    const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  std::vector<Scalar> r(dim, Scalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const auto& sc = mult[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (sc[k].is_zero()) continue;
        r[k] += c * sc[k];
      }
    }
  }
  return r;
}

Matrix AlgebraOnBasis::left_mult_matrix(const std::vector<Scalar>& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Scalar> bj(dim, Scalar::zero(field));
    bj[j] = Scalar::one(field);
    auto prod = multiply(a, bj);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = prod[k];
  }
  return m;
}

void AlgebraOnBasis::validate() const {
  if (mult.size() != dim * dim || unit.size() != dim)
    throw SchemaError("algebra: structure constant sizes inconsistent");
  auto basis = [&](std::size_t i) {
    std::vector<Scalar> v(dim, Scalar::zero(field));
    v[i] = Scalar::one(field);
    return v;
  };
  for (std::size_t i = 0; i < dim; ++i) {
    if (multiply(unit, basis(i)) != basis(i))
      throw AxiomViolation("left unit", "basis " + std::to_string(i));
    if (multiply(basis(i), unit) != basis(i))
      throw AxiomViolation("right unit", "basis " + std::to_string(i));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l) {
        auto lhs = multiply(mult[i * dim + j], basis(l));
        auto rhs = multiply(basis(i), mult[j * dim + l]);
        if (lhs != rhs)
          throw AxiomViolation("associativity",
                               "basis (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," +
                                   std::to_string(l) + ")");
      }
}

// ---------------------------------------------------------------------------
// Radical and idempotents

namespace {

std::vector<Scalar> basis_vec(const FieldSpec& f, std::size_t dim,
                              std::size_t i) {
  std::vector<Scalar> v(dim, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

Matrix vectors_to_matrix(const FieldSpec& f,
                         const std::vector<std::vector<Scalar>>& vs) {
  std::size_t dim = vs.empty() ? 0 : vs[0].size();
  Matrix m(f, dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
  return m;
}

// Span closure of products: returns the least k with (span of vs)^k = 0, or
// throws if the span is not nilpotent.
std::size_t nilpotency_index(const AlgebraOnBasis& a,
                             const std::vector<std::vector<Scalar>>& vs) {
  if (vs.empty()) return 1;
  std::vector<Matrix> current;
  for (const auto& v : vs) current.push_back(Matrix::column(a.field, v));
  current = column_space_basis(current);
  std::size_t k = 1;
  while (!current.empty()) {
    if (k > a.dim + 1)
      throw AxiomViolation("radical nilpotency",
                           "power " + std::to_string(k) + " still nonzero");
    std::vector<Matrix> next;
    for (const auto& u : current)
      for (const auto& v : vs) {
        std::vector<Scalar> uc(a.dim), vc = v;
        for (std::size_t i = 0; i < a.dim; ++i) uc[i] = u.at(i, 0);
        next.push_back(Matrix::column(a.field, a.multiply(uc, vc)));
      }
    current = column_space_basis(next);
    ++k;
  }
  return k;
}

}  // namespace

RadicalResult radical(const AlgebraOnBasis& a) {
  if (!a.field.characteristic_zero())
    throw UnsupportedCharacteristic(
        "radical via the trace form needs characteristic zero");
  std::vector<Matrix> lmats;
  for (std::size_t i = 0; i < a.dim; ++i)
    lmats.push_back(a.left_mult_matrix(basis_vec(a.field, a.dim, i)));
  Matrix gram(a.field, a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      Scalar t = Scalar::zero(a.field);
      for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
          const Scalar& x = lmats[i].at(r, c);
          if (x.is_zero()) continue;
          t += x * lmats[j].at(c, r);
        }
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  RadicalResult res;
  for (const auto& k : kernel_basis(gram)) {
    std::vector<Scalar> v(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) v[i] = k.at(i, 0);
    res.basis.push_back(std::move(v));
  }
  res.nilpotency_index = nilpotency_index(a, res.basis);
  return res;
}

namespace {

// The quotient A/J presented on the complement of J spanned by non-pivot
// coordinates of the radical's RREF.
struct Quotient {
  AlgebraOnBasis algebra;              // structure of A/J
  std::vector<std::size_t> coord_of;   // quotient basis index -> A coordinate
  Matrix reducer;                      // RREF of J row space
  std::vector<std::size_t> pivots;

  // Image of an element of A in quotient coordinates.
  std::vector<Scalar> project(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    // Subtract radical rows to kill pivot coordinates.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Scalar& c = w[pivots[r]];
      if (c.is_zero()) continue;
      Scalar factor = c;
      for (std::size_t j = 0; j < w.size(); ++j) {
        const Scalar& x = reducer.at(r, j);
        if (!x.is_zero()) w[j] -= factor * x;
      }
    }
    std::vector<Scalar> out;
    out.reserve(coord_of.size());
    for (auto c : coord_of) out.push_back(w[c]);
    return out;
  }

  // A coordinates of a quotient element (the canonical section).
  std::vector<Scalar> lift(const std::vector<Scalar>& v,
                           const FieldSpec& f, std::size_t dim) const {
    std::vector<Scalar> out(dim, Scalar::zero(f));
    for (std::size_t i = 0; i < coord_of.size(); ++i) out[coord_of[i]] = v[i];
    return out;
  }
};

Quotient make_quotient(const AlgebraOnBasis& a,
                       const std::vector<std::vector<Scalar>>& jbasis) {
  Quotient q;
  Matrix rows(a.field, jbasis.size(), a.dim);
  for (std::size_t i = 0; i < jbasis.size(); ++i)
    for (std::size_t j = 0; j < a.dim; ++j) rows.at(i, j) = jbasis[i][j];
  auto r = rref(rows);
  q.reducer = r.reduced.row_slice(0, r.rank);
  q.pivots = r.pivots;
  std::vector<bool> is_pivot(a.dim, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < a.dim; ++c)
    if (!is_pivot[c]) q.coord_of.push_back(c);

  q.algebra.field = a.field;
  q.algebra.dim = q.coord_of.size();
  q.algebra.mult.resize(q.algebra.dim * q.algebra.dim);
  for (std::size_t i = 0; i < q.algebra.dim; ++i)
    for (std::size_t j = 0; j < q.algebra.dim; ++j) {
      auto prod = a.multiply(basis_vec(a.field, a.dim, q.coord_of[i]),
                             basis_vec(a.field, a.dim, q.coord_of[j]));
      q.algebra.mult[i * q.algebra.dim + j] = q.project(prod);
    }
  q.algebra.unit = q.project(a.unit);
  return q;
}

// Probe-based splitting of the unit of a semisimple algebra into primitive
// orthogonal idempotents.  A probe z splits its corner when the minimal
// polynomial of z over Q has two coprime parts; the corresponding CRT
// idempotent is an exact polynomial in z.
struct UnitSplitter {
  const AlgebraOnBasis& alg;
  std::mt19937_64 rng;

  explicit UnitSplitter(const AlgebraOnBasis& a, unsigned long seed)
      : alg(a), rng(seed) {}

  std::vector<Scalar> poly_at(const qpoly::QPoly& p,
                              const std::vector<Scalar>& z,
                              const std::vector<Scalar>& unit_of_corner) {
    // Horner in the algebra, with the corner unit as 1.
    std::vector<Scalar> r(alg.dim, Scalar::zero(alg.field));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      r = alg.multiply(r, z);
      if (*it != 0) {
        Scalar c = Scalar::from_mpq(alg.field, *it);
        for (std::size_t i = 0; i < alg.dim; ++i)
          r[i] += c * unit_of_corner[i];
      }
    }
    return r;
  }

  // Minimal polynomial over Q of z acting on the corner subspace.
  qpoly::QPoly minpoly_q(const std::vector<Scalar>& z,
                         const std::vector<Matrix>& corner_basis) {
    Matrix basis_mat = vectors_to_matrix(alg.field, {});
    std::size_t d = corner_basis.size();
    Matrix cb(alg.field, alg.dim, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < alg.dim; ++i)
        cb.at(i, j) = corner_basis[j].at(i, 0);
    // Matrix of left multiplication by z on the corner, in corner coords.
    Matrix images(alg.field, alg.dim, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Scalar> v(alg.dim);
      for (std::size_t i = 0; i < alg.dim; ++i) v[i] = corner_basis[j].at(i, 0);
      auto img = alg.multiply(z, v);
      for (std::size_t i = 0; i < alg.dim; ++i) images.at(i, j) = img[i];
    }
    auto sol = solve_all(cb, images);
    if (!sol.particular)
      throw Error("corner is not closed under multiplication");
    Matrix lz = *sol.particular;  // d x d over the base field
    return qpoly::minimal_polynomial(qpoly::flatten_to_rationals(lz));
  }

  // All elements we try as probes inside a corner.
  std::vector<std::vector<Scalar>> probes(
      const std::vector<Matrix>& corner_basis) {
    std::vector<std::vector<Scalar>> out;
    auto as_vec = [&](const Matrix& m) {
      std::vector<Scalar> v(alg.dim);
      for (std::size_t i = 0; i < alg.dim; ++i) v[i] = m.at(i, 0);
      return v;
    };
    for (const auto& b : corner_basis) out.push_back(as_vec(b));
    std::size_t nb = corner_basis.size();
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        if (i == j) continue;
        out.push_back(alg.multiply(as_vec(corner_basis[i]),
                                   as_vec(corner_basis[j])));
      }
    // Seeded random small combinations; includes zeta multiples so that
    // cyclotomic characters separate.
    unsigned long fdeg = alg.field.degree();
    for (int trial = 0; trial < 48; ++trial) {
      std::vector<Scalar> z(alg.dim, Scalar::zero(alg.field));
      for (const auto& b : corner_basis) {
        Scalar coeff = Scalar::zero(alg.field);
        for (unsigned long d = 0; d < fdeg; ++d) {
          long c = static_cast<long>(rng() % 7) - 3;
          if (c == 0) continue;
          std::vector<mpq_class> cc(fdeg, mpq_class(0));
          cc[d] = c;
          coeff += Scalar::from_coeffs(alg.field, cc);
        }
        if (coeff.is_zero()) continue;
        for (std::size_t i = 0; i < alg.dim; ++i)
          z[i] += coeff * b.at(i, 0);
      }
      out.push_back(std::move(z));
    }
    return out;
  }

  void split(const std::vector<Scalar>& e,
             std::vector<std::vector<Scalar>>& out) {
    // Corner e A e.
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < alg.dim; ++i) {
      auto v = alg.multiply(alg.multiply(e, basis_vec(alg.field, alg.dim, i)), e);
      gens.push_back(Matrix::column(alg.field, v));
    }
    auto corner = column_space_basis(gens);
    if (corner.empty()) throw Error("zero idempotent in splitter");
    if (corner.size() == 1) {
      out.push_back(e);
      return;
    }
    for (const auto& z : probes(corner)) {
      bool zero = true;
      for (const auto& s : z)
        if (!s.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      auto mu = minpoly_q(z, corner);
      auto factors = qpoly::factor_rational(mu);
      if (factors.size() < 2) continue;
      // Group into f = factors[0]^mult, g = rest; they are coprime unless
      // all factors coincide.
      qpoly::QPoly f = {mpq_class(1)}, g = {mpq_class(1)};
      for (const auto& fac : factors) {
        if (fac == factors[0])
          f = qpoly::mul(f, fac);
        else
          g = qpoly::mul(g, fac);
      }
      if (qpoly::degree(g) == 0) continue;  // single irreducible: field, no split
      auto bez = qpoly::ext_gcd(f, g);
      // CRT idempotent: 1 on the f-part, 0 on the g-part.
      auto vg = qpoly::mul(bez.v, g);
      auto e1 = poly_at(vg, z, e);
      auto e1sq = alg.multiply(e1, e1);
      if (e1sq != e1) continue;  // defensive: reject non-idempotent output
      bool is_zero = true, is_e = true;
      for (std::size_t i = 0; i < alg.dim; ++i) {
        if (!e1[i].is_zero()) is_zero = false;
        if (e1[i] != e[i]) is_e = false;
      }
      if (is_zero || is_e) continue;
      std::vector<Scalar> e2(alg.dim);
      for (std::size_t i = 0; i < alg.dim; ++i) e2[i] = e[i] - e1[i];
      split(e1, out);
      split(e2, out);
      return;
    }
    throw NotSplit("a simple summand of dimension " +
                   std::to_string(corner.size()) +
                   " admits no splitting over the base field; enlarge the "
                   "field (e.g. pass to a cyclotomic extension)");
  }
};

}  // namespace

std::vector<std::vector<Scalar>> primitive_idempotents(const AlgebraOnBasis& a,
                                                       unsigned long seed) {
  if (!a.field.characteristic_zero())
    throw UnsupportedCharacteristic(
        "primitive idempotents need characteristic zero");
  auto rad = radical(a);
  auto q = make_quotient(a, rad.basis);

  UnitSplitter splitter(q.algebra, seed);
  std::vector<std::vector<Scalar>> bar_idems;
  splitter.split(q.algebra.unit, bar_idems);

  // Lift through the radical: e <- 3e^2 - 2e^3 inside the corner
  // (1 - F) A (1 - F) of the previously lifted family, so orthogonality is
  // automatic; the last idempotent is 1 - sum of the others.
  std::vector<std::vector<Scalar>> lifted;
  std::vector<Scalar> total(a.dim, Scalar::zero(a.field));
  auto sub = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) r[i] = x[i] - y[i];
    return r;
  };
  for (std::size_t idx = 0; idx + 1 < bar_idems.size(); ++idx) {
    auto x = q.lift(bar_idems[idx], a.field, a.dim);
    auto corner_unit = sub(a.unit, total);
    auto e = a.multiply(a.multiply(corner_unit, x), corner_unit);
    for (std::size_t iter = 0; iter <= a.dim + 2; ++iter) {
      auto e2 = a.multiply(e, e);
      if (e2 == e) break;
      if (iter == a.dim + 2)
        throw Error("idempotent lifting did not converge");
      // 3e^2 - 2e^3
      auto e3 = a.multiply(e2, e);
      for (std::size_t i = 0; i < a.dim; ++i) {
        Scalar three = Scalar::from_int(a.field, 3);
        Scalar two = Scalar::from_int(a.field, 2);
        e[i] = three * e2[i] - two * e3[i];
      }
    }
    lifted.push_back(e);
    for (std::size_t i = 0; i < a.dim; ++i) total[i] += e[i];
  }
  lifted.push_back(sub(a.unit, total));

  // Exact certificates: orthogonal idempotents summing to 1, each primitive
  // (corner is local: its radical has codimension 1).
  std::vector<Scalar> sum(a.dim, Scalar::zero(a.field));
  for (const auto& e : lifted) {
    if (a.multiply(e, e) != e) throw Error("lifted element not idempotent");
    for (std::size_t i = 0; i < a.dim; ++i) sum[i] += e[i];
  }
  if (sum != a.unit) throw Error("idempotents do not sum to 1");
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if (i == j) continue;
      auto prod = a.multiply(lifted[i], lifted[j]);
      for (const auto& s : prod)
        if (!s.is_zero()) throw Error("lifted idempotents not orthogonal");
    }
  for (const auto& e : lifted) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < a.dim; ++i)
      gens.push_back(Matrix::column(
          a.field,
          a.multiply(a.multiply(e, basis_vec(a.field, a.dim, i)), e)));
    auto corner = column_space_basis(gens);
    AlgebraOnBasis ca;
    ca.field = a.field;
    ca.dim = corner.size();
    ca.mult.resize(ca.dim * ca.dim);
    Matrix cb(a.field, a.dim, ca.dim);
    for (std::size_t j = 0; j < ca.dim; ++j)
      for (std::size_t i = 0; i < a.dim; ++i) cb.at(i, j) = corner[j].at(i, 0);
    for (std::size_t i = 0; i < ca.dim; ++i)
      for (std::size_t j = 0; j < ca.dim; ++j) {
        std::vector<Scalar> vi(a.dim), vj(a.dim);
        for (std::size_t t = 0; t < a.dim; ++t) {
          vi[t] = corner[i].at(t, 0);
          vj[t] = corner[j].at(t, 0);
        }
        auto sol = solve_all(cb, Matrix::column(a.field, a.multiply(vi, vj)));
        if (!sol.particular) throw Error("corner not multiplicatively closed");
        std::vector<Scalar> coords(ca.dim);
        for (std::size_t t = 0; t < ca.dim; ++t)
          coords[t] = sol.particular->at(t, 0);
        ca.mult[i * ca.dim + j] = std::move(coords);
      }
    auto usol = solve_all(cb, Matrix::column(a.field, e));
    if (!usol.particular) throw Error("idempotent outside its corner");
    ca.unit.resize(ca.dim);
    for (std::size_t t = 0; t < ca.dim; ++t)
      ca.unit[t] = usol.particular->at(t, 0);
    auto crad = radical(ca);
    if (ca.dim - crad.basis.size() != 1)
      throw Error("lifted idempotent is not primitive");
  }
  return lifted;
}

// ---------------------------------------------------------------------------
// HopfAlgebra

AlgebraOnBasis HopfAlgebra::as_algebra() const {
  AlgebraOnBasis a;
  a.field = field;
  a.dim = dim;
  a.mult = mult;
  a.unit = unit;
  return a;
}

std::vector<Scalar> HopfAlgebra::multiply(const std::vector<Scalar>& a,
                                          const std::vector<Scalar>& b) const {
  return as_algebra().multiply(a, b);
}

std::vector<Scalar> HopfAlgebra::basis_vector(std::size_t i) const {
  return basis_vec(field, dim, i);
}

std::vector<Scalar> HopfAlgebra::antipode_of(
    const std::vector<Scalar>& a) const {
  std::vector<Scalar> r(dim, Scalar::zero(field));
  for (std::size_t j = 0; j < dim; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim; ++i) {
      const Scalar& c = antipode.at(i, j);
      if (!c.is_zero()) r[i] += a[j] * c;
    }
  }
  return r;
}

std::vector<Scalar> HopfAlgebra::pivot_inverse() const {
  // Solve L_g x = 1.
  auto lg = as_algebra().left_mult_matrix(pivot);
  auto sol = solve_all(lg, Matrix::column(field, unit));
  if (!sol.particular || !sol.kernel_basis.empty())
    throw AxiomViolation("pivot invertible", "pivot");
  std::vector<Scalar> r(dim);
  for (std::size_t i = 0; i < dim; ++i) r[i] = sol.particular->at(i, 0);
  return r;
}

const std::vector<std::size_t>& HopfAlgebra::generating_indices() const {
  if (!gens_.empty() || dim == 0) return gens_;
  auto alg = as_algebra();
  // Greedy: grow the unital subalgebra generated by chosen basis elements
  // until it is everything.
  std::vector<std::vector<Scalar>> span_vecs = {unit};
  auto closure = [&](std::vector<std::vector<Scalar>> seed) {
    std::vector<Matrix> cols;
    for (const auto& v : seed) cols.push_back(Matrix::column(field, v));
    auto basis = column_space_basis(cols);
    for (;;) {
      std::vector<Matrix> next = basis;
      for (const auto& u : basis)
        for (const auto& v : basis) {
          std::vector<Scalar> uc(dim), vc(dim);
          for (std::size_t i = 0; i < dim; ++i) {
            uc[i] = u.at(i, 0);
            vc[i] = v.at(i, 0);
          }
          next.push_back(Matrix::column(field, alg.multiply(uc, vc)));
        }
      auto grown = column_space_basis(next);
      if (grown.size() == basis.size()) return basis;
      basis = std::move(grown);
    }
  };
  std::vector<std::vector<Scalar>> chosen = {unit};
  auto current = closure(chosen);
  while (current.size() < dim) {
    // First basis element outside the current span.
    std::size_t pick = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      Matrix test(field, dim, current.size());
      for (std::size_t j = 0; j < current.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r)
          test.at(r, j) = current[j].at(r, 0);
      auto sol = solve_all(test, Matrix::column(field, basis_vector(i)));
      if (!sol.particular) {
        pick = i;
        break;
      }
    }
    if (pick == dim) throw Error("generator search failed to converge");
    gens_.push_back(pick);
    chosen.push_back(basis_vector(pick));
    current = closure(chosen);
  }
  if (gens_.empty()) gens_.push_back(0);  // trivial algebra: any element
  return gens_;
}

void HopfAlgebra::validate() const {
  if (basis_names.size() != dim || mult.size() != dim * dim ||
      unit.size() != dim || comult.size() != dim || counit.size() != dim ||
      antipode.rows() != dim || antipode.cols() != dim || pivot.size() != dim)
    throw SchemaError("hopf: structure sizes inconsistent with dim");
  as_algebra().validate();

  auto alg = as_algebra();
  auto bvec = [&](std::size_t i) { return basis_vector(i); };

  // Coassociativity: (Delta x id) Delta = (id x Delta) Delta on each basis
  // element, as tensors T[a][b][c].
  for (std::size_t i = 0; i < dim; ++i) {
    const Matrix& c = comult[i];
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t cc = 0; cc < dim; ++cc) {
          Scalar lhs = Scalar::zero(field), rhs = Scalar::zero(field);
          for (std::size_t j = 0; j < dim; ++j) {
            if (!c.at(j, cc).is_zero())
              lhs += c.at(j, cc) * comult[j].at(a, b);
            if (!c.at(a, j).is_zero())
              rhs += c.at(a, j) * comult[j].at(b, cc);
          }
          if (lhs != rhs)
            throw AxiomViolation("coassociativity",
                                 "basis " + std::to_string(i));
        }
  }
  // Counit: (eps x id) Delta = id = (id x eps) Delta.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      Scalar left = Scalar::zero(field), right = Scalar::zero(field);
      for (std::size_t j = 0; j < dim; ++j) {
        left += counit[j] * comult[i].at(j, k);
        right += counit[j] * comult[i].at(k, j);
      }
      Scalar expect = (k == i) ? Scalar::one(field) : Scalar::zero(field);
      if (left != expect)
        throw AxiomViolation("counit (left)", "basis " + std::to_string(i));
      if (right != expect)
        throw AxiomViolation("counit (right)", "basis " + std::to_string(i));
    }
  }
  // Delta and eps are algebra maps; Delta(1) = 1 x 1, eps(1) = 1.
  {
    Matrix unit_tensor(field, dim, dim);
    Scalar eps_unit = Scalar::zero(field);
    Matrix delta_unit(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (unit[i].is_zero()) continue;
      eps_unit += unit[i] * counit[i];
      delta_unit = delta_unit + comult[i] * unit[i];
      for (std::size_t j = 0; j < dim; ++j)
        if (!unit[j].is_zero())
          unit_tensor.at(i, j) = unit[i] * unit[j];
    }
    if (!(eps_unit == Scalar::one(field)))
      throw AxiomViolation("counit of unit", "unit");
    if (delta_unit != unit_tensor)
      throw AxiomViolation("comultiplication of unit", "unit");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      // eps(b_i b_j) = eps(b_i) eps(b_j)
      Scalar lhs = Scalar::zero(field);
      const auto& prod = mult[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!prod[k].is_zero()) lhs += prod[k] * counit[k];
      if (lhs != counit[i] * counit[j])
        throw AxiomViolation("counit multiplicative",
                             "basis (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      // Delta(b_i b_j) = Delta(b_i) Delta(b_j) in H (x) H
      Matrix want(field, dim, dim);
      for (std::size_t k = 0; k < dim; ++k)
        if (!prod[k].is_zero()) want = want + comult[k] * prod[k];
      Matrix got(field, dim, dim);
      const Matrix& ci = comult[i];
      const Matrix& cj = comult[j];
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
          if (ci.at(a, b).is_zero()) continue;
          for (std::size_t cc = 0; cc < dim; ++cc)
            for (std::size_t dd = 0; dd < dim; ++dd) {
              if (cj.at(cc, dd).is_zero()) continue;
              Scalar coeff = ci.at(a, b) * cj.at(cc, dd);
              const auto& left = mult[a * dim + cc];
              const auto& right = mult[b * dim + dd];
              for (std::size_t s = 0; s < dim; ++s) {
                if (left[s].is_zero()) continue;
                Scalar cs = coeff * left[s];
                for (std::size_t t = 0; t < dim; ++t)
                  if (!right[t].is_zero()) got.at(s, t) += cs * right[t];
              }
            }
        }
      if (want != got)
        throw AxiomViolation("comultiplication multiplicative",
                             "basis (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
  // Antipode axioms: m (S x id) Delta = u eps = m (id x S) Delta.
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Scalar> left(dim, Scalar::zero(field));
    std::vector<Scalar> right(dim, Scalar::zero(field));
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        const Scalar& c = comult[i].at(a, b);
        if (c.is_zero()) continue;
        auto sa_b = alg.multiply(antipode_of(bvec(a)), bvec(b));
        auto a_sb = alg.multiply(bvec(a), antipode_of(bvec(b)));
        for (std::size_t t = 0; t < dim; ++t) {
          left[t] += c * sa_b[t];
          right[t] += c * a_sb[t];
        }
      }
    for (std::size_t t = 0; t < dim; ++t) {
      Scalar expect = counit[i] * unit[t];
      if (left[t] != expect)
        throw AxiomViolation("antipode (S x id)", "basis " + std::to_string(i));
      if (right[t] != expect)
        throw AxiomViolation("antipode (id x S)", "basis " + std::to_string(i));
    }
  }
  // Pivot: grouplike, counit 1, invertible, and S^2(a) g = g a.
  {
    Matrix delta_g(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!pivot[i].is_zero()) delta_g = delta_g + comult[i] * pivot[i];
    Matrix g_tensor_g(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (pivot[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (!pivot[j].is_zero()) g_tensor_g.at(i, j) = pivot[i] * pivot[j];
    }
    if (delta_g != g_tensor_g)
      throw AxiomViolation("pivot grouplike", "pivot");
    Scalar eps_g = Scalar::zero(field);
    for (std::size_t i = 0; i < dim; ++i) eps_g += pivot[i] * counit[i];
    if (!(eps_g == Scalar::one(field)))
      throw AxiomViolation("counit of pivot", "pivot");
    pivot_inverse();  // throws when not invertible
    for (std::size_t i = 0; i < dim; ++i) {
      auto s2 = antipode_of(antipode_of(bvec(i)));
      auto lhs = alg.multiply(s2, pivot);
      auto rhs = alg.multiply(pivot, bvec(i));
      if (lhs != rhs)
        throw AxiomViolation("antipode square is pivot conjugation",
                             "basis " + std::to_string(i));
    }
  }
}

// ---------------------------------------------------------------------------
// JSON load / save

HopfPtr load_hopf(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  auto h = std::make_shared<HopfAlgebra>();
  try {
    h->name = doc.value("name", std::string("unnamed"));
    h->field = field_from_json(doc.at("field"));
    h->dim = doc.at("dim").get<std::size_t>();
    h->basis_names =
        doc.value("basis", std::vector<std::string>{});
    if (h->basis_names.empty())
      for (std::size_t i = 0; i < h->dim; ++i)
        h->basis_names.push_back("b" + std::to_string(i));
    if (h->basis_names.size() != h->dim)
      throw SchemaError("basis name count differs from dim");

    auto f = h->field;
    auto scal = [&](const json& j) { return scalar_from_json(f, j); };

    h->unit.assign(h->dim, Scalar::zero(f));
    const json& unit_j = doc.at("unit");
    if (unit_j.size() != h->dim) throw SchemaError("unit: wrong length");
    for (std::size_t i = 0; i < h->dim; ++i) h->unit[i] = scal(unit_j[i]);

    h->mult.assign(h->dim * h->dim,
                   std::vector<Scalar>(h->dim, Scalar::zero(f)));
    for (const auto& entry : doc.at("mult")) {
      std::size_t i = entry.at("i").get<std::size_t>();
      std::size_t j = entry.at("j").get<std::size_t>();
      if (i >= h->dim || j >= h->dim)
        throw SchemaError("mult: index out of range");
      for (const auto& term : entry.at("out")) {
        std::size_t k = term.at("k").get<std::size_t>();
        if (k >= h->dim) throw SchemaError("mult: output index out of range");
        h->mult[i * h->dim + j][k] = scal(term.at("c"));
      }
    }

    h->comult.assign(h->dim, Matrix(f, h->dim, h->dim));
    for (const auto& entry : doc.at("comult")) {
      std::size_t i = entry.at("i").get<std::size_t>();
      if (i >= h->dim) throw SchemaError("comult: index out of range");
      for (const auto& term : entry.at("out")) {
        std::size_t j = term.at("j").get<std::size_t>();
        std::size_t k = term.at("k").get<std::size_t>();
        if (j >= h->dim || k >= h->dim)
          throw SchemaError("comult: output index out of range");
        h->comult[i].at(j, k) = scal(term.at("c"));
      }
    }

    const json& counit_j = doc.at("counit");
    if (counit_j.size() != h->dim) throw SchemaError("counit: wrong length");
    h->counit.assign(h->dim, Scalar::zero(f));
    for (std::size_t i = 0; i < h->dim; ++i) h->counit[i] = scal(counit_j[i]);

    // antipode rows: row j = coordinates of S(b_j); stored column-wise.
    const json& anti_j = doc.at("antipode");
    if (anti_j.size() != h->dim) throw SchemaError("antipode: wrong size");
    h->antipode = Matrix(f, h->dim, h->dim);
    for (std::size_t jcol = 0; jcol < h->dim; ++jcol) {
      if (anti_j[jcol].size() != h->dim)
        throw SchemaError("antipode: ragged rows");
      for (std::size_t i = 0; i < h->dim; ++i)
        h->antipode.at(i, jcol) = scal(anti_j[jcol][i]);
    }

    const json& pivot_j = doc.at("pivot");
    if (pivot_j.size() != h->dim) throw SchemaError("pivot: wrong length");
    h->pivot.assign(h->dim, Scalar::zero(f));
    for (std::size_t i = 0; i < h->dim; ++i) h->pivot[i] = scal(pivot_j[i]);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("hopf document: ") + e.what());
  }
  h->validate();
  return h;
}

std::string hopf_to_json(const HopfAlgebra& h, bool pretty) {
  json doc;
  doc["name"] = h.name;
  doc["field"] = field_to_json(h.field);
  doc["dim"] = h.dim;
  doc["basis"] = h.basis_names;
  json unit = json::array();
  for (const auto& s : h.unit) unit.push_back(scalar_to_json(s));
  doc["unit"] = unit;
  json mult = json::array();
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      json out = json::array();
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& c = h.mult[i * h.dim + j][k];
        if (c.is_zero()) continue;
        out.push_back({{"k", k}, {"c", scalar_to_json(c)}});
      }
      if (!out.empty()) mult.push_back({{"i", i}, {"j", j}, {"out", out}});
    }
  doc["mult"] = mult;
  json comult = json::array();
  for (std::size_t i = 0; i < h.dim; ++i) {
    json out = json::array();
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& c = h.comult[i].at(j, k);
        if (c.is_zero()) continue;
        out.push_back({{"j", j}, {"k", k}, {"c", scalar_to_json(c)}});
      }
    if (!out.empty()) comult.push_back({{"i", i}, {"out", out}});
  }
  doc["comult"] = comult;
  json counit = json::array();
  for (const auto& s : h.counit) counit.push_back(scalar_to_json(s));
  doc["counit"] = counit;
  json anti = json::array();
  for (std::size_t j = 0; j < h.dim; ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < h.dim; ++i)
      row.push_back(scalar_to_json(h.antipode.at(i, j)));
    anti.push_back(row);
  }
  doc["antipode"] = anti;
  json pivot = json::array();
  for (const auto& s : h.pivot) pivot.push_back(scalar_to_json(s));
  doc["pivot"] = pivot;
  return pretty ? doc.dump(2) : doc.dump();
}

// ---------------------------------------------------------------------------
// Built-in algebras

namespace {

// Element of H (x) H as a dim x dim coefficient matrix.
Matrix tensor_square_multiply(const AlgebraOnBasis& alg, const Matrix& x,
                              const Matrix& y) {
  std::size_t dim = alg.dim;
  Matrix r(alg.field, dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (x.at(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t d = 0; d < dim; ++d) {
          if (y.at(c, d).is_zero()) continue;
          Scalar coeff = x.at(a, b) * y.at(c, d);
          const auto& left = alg.mult[a * dim + c];
          const auto& right = alg.mult[b * dim + d];
          for (std::size_t s = 0; s < dim; ++s) {
            if (left[s].is_zero()) continue;
            Scalar cs = coeff * left[s];
            for (std::size_t t = 0; t < dim; ++t)
              if (!right[t].is_zero()) r.at(s, t) += cs * right[t];
          }
        }
    }
  return r;
}

HopfPtr finish(std::shared_ptr<HopfAlgebra> h) {
  h->validate();
  return h;
}

}  // namespace

HopfPtr make_taft(unsigned long n) {
  if (n < 2) throw SchemaError("taft(n) requires n >= 2");
  auto h = std::make_shared<HopfAlgebra>();
  h->name = "taft" + std::to_string(n);
  h->field = FieldSpec::cyclotomic(n);
  const FieldSpec f = h->field;
  h->dim = n * n;
  Scalar zeta = Scalar::zeta(f);
  auto zpow = [&](unsigned long e) {
    Scalar r = Scalar::one(f);
    for (unsigned long i = 0; i < e % n; ++i) r *= zeta;
    return r;
  };
  auto idx = [&](unsigned long i, unsigned long j) { return i * n + j; };
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j)
      h->basis_names.push_back("g^" + std::to_string(i) + "x^" +
                               std::to_string(j));

  // Relations g^n = 1, x^n = 0, x g = zeta g x, so
  // (g^i x^j)(g^k x^l) = zeta^{jk} g^{i+k} x^{j+l}.
  h->mult.assign(h->dim * h->dim, std::vector<Scalar>(h->dim, Scalar::zero(f)));
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j)
      for (unsigned long k = 0; k < n; ++k)
        for (unsigned long l = 0; l < n; ++l) {
          if (j + l >= n) continue;
          h->mult[idx(i, j) * h->dim + idx(k, l)][idx((i + k) % n, j + l)] =
              zpow(j * k % n);
        }
  h->unit.assign(h->dim, Scalar::zero(f));
  h->unit[idx(0, 0)] = Scalar::one(f);

  // Comultiplication from the generators: Delta(g) = g (x) g,
  // Delta(x) = x (x) 1 + g (x) x, extended multiplicatively in H (x) H.
  auto alg = h->as_algebra();
  Matrix delta_g(f, h->dim, h->dim);
  delta_g.at(idx(1, 0), idx(1, 0)) = Scalar::one(f);
  Matrix delta_x(f, h->dim, h->dim);
  delta_x.at(idx(0, 1), idx(0, 0)) = Scalar::one(f);
  delta_x.at(idx(1, 0), idx(0, 1)) = Scalar::one(f);
  Matrix delta_one(f, h->dim, h->dim);
  delta_one.at(idx(0, 0), idx(0, 0)) = Scalar::one(f);
  h->comult.assign(h->dim, Matrix(f, h->dim, h->dim));
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j) {
      Matrix d = delta_one;
      for (unsigned long t = 0; t < i; ++t)
        d = tensor_square_multiply(alg, d, delta_g);
      for (unsigned long t = 0; t < j; ++t)
        d = tensor_square_multiply(alg, d, delta_x);
      h->comult[idx(i, j)] = d;
    }

  h->counit.assign(h->dim, Scalar::zero(f));
  for (unsigned long i = 0; i < n; ++i)
    h->counit[idx(i, 0)] = Scalar::one(f);

  // S(g) = g^{n-1}, S(x) = -g^{n-1} x, S(g^i x^j) = S(x)^j S(g)^i.
  std::vector<Scalar> sg(h->dim, Scalar::zero(f));
  sg[idx(n - 1, 0)] = Scalar::one(f);
  std::vector<Scalar> sx(h->dim, Scalar::zero(f));
  sx[idx(n - 1, 1)] = -Scalar::one(f);
  h->antipode = Matrix(f, h->dim, h->dim);
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j) {
      std::vector<Scalar> v = h->unit;
      for (unsigned long t = 0; t < j; ++t) v = alg.multiply(v, sx);
      for (unsigned long t = 0; t < i; ++t) v = alg.multiply(v, sg);
      for (std::size_t r = 0; r < h->dim; ++r)
        h->antipode.at(r, idx(i, j)) = v[r];
    }

  h->pivot.assign(h->dim, Scalar::zero(f));
  h->pivot[idx(n - 1, 0)] = Scalar::one(f);
  return finish(h);
}

HopfPtr make_sweedler() {
  // Basis 1, g, x, gx over Q with g^2 = 1, x^2 = 0, x g = -g x,
  // Delta x = x (x) 1 + g (x) x, S(x) = -gx, pivot g.
  auto h = std::make_shared<HopfAlgebra>();
  h->name = "sweedler";
  h->field = FieldSpec::rationals();
  const FieldSpec f = h->field;
  h->dim = 4;
  h->basis_names = {"1", "g", "x", "gx"};
  auto one = Scalar::one(f);
  auto neg = -one;
  h->mult.assign(16, std::vector<Scalar>(4, Scalar::zero(f)));
  // Products in the order 1, g, x, gx; x g = -gx, gx g = -x, x gx = ... all
  // derived from the relations.
  auto set = [&](int i, int j, int k, const Scalar& c) {
    h->mult[i * 4 + j][k] = c;
  };
  // row: left factor, col: right factor
  set(0, 0, 0, one); set(0, 1, 1, one); set(0, 2, 2, one); set(0, 3, 3, one);
  set(1, 0, 1, one); set(1, 1, 0, one); set(1, 2, 3, one); set(1, 3, 2, one);
  set(2, 0, 2, one); set(2, 1, 3, neg); set(3, 0, 3, one); set(3, 1, 2, neg);
  // x*x = 0, x*gx = x*g*x = -gx*x = 0, gx*x = 0, gx*gx = 0: nothing to set.
  h->unit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  h->comult.assign(4, Matrix(f, 4, 4));
  h->comult[0].at(0, 0) = one;                        // 1 -> 1 (x) 1
  h->comult[1].at(1, 1) = one;                        // g -> g (x) g
  h->comult[2].at(2, 0) = one;                        // x -> x (x) 1 + g (x) x
  h->comult[2].at(1, 2) = one;
  h->comult[3].at(3, 1) = one;                        // gx -> gx (x) g + 1 (x) gx
  h->comult[3].at(0, 3) = one;
  h->counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
  h->antipode = Matrix(f, 4, 4);
  h->antipode.at(0, 0) = one;   // S(1) = 1
  h->antipode.at(1, 1) = one;   // S(g) = g
  h->antipode.at(3, 2) = neg;   // S(x) = -gx
  h->antipode.at(2, 3) = one;   // S(gx) = S(x) S(g) = -gx g = x
  h->pivot = {Scalar::zero(f), one, Scalar::zero(f), Scalar::zero(f)};
  return finish(h);
}

HopfPtr make_group_algebra_zn(unsigned long n) {
  if (n < 1) throw SchemaError("group_z(n) requires n >= 1");
  auto h = std::make_shared<HopfAlgebra>();
  h->name = "group_z" + std::to_string(n);
  h->field = (n <= 2) ? FieldSpec::rationals() : FieldSpec::cyclotomic(n);
  const FieldSpec f = h->field;
  h->dim = n;
  for (unsigned long i = 0; i < n; ++i)
    h->basis_names.push_back("g^" + std::to_string(i));
  h->mult.assign(n * n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (unsigned long i = 0; i < n; ++i)
    for (unsigned long j = 0; j < n; ++j)
      h->mult[i * n + j][(i + j) % n] = Scalar::one(f);
  h->unit.assign(n, Scalar::zero(f));
  h->unit[0] = Scalar::one(f);
  h->comult.assign(n, Matrix(f, n, n));
  for (unsigned long i = 0; i < n; ++i)
    h->comult[i].at(i, i) = Scalar::one(f);
  h->counit.assign(n, Scalar::one(f));
  h->antipode = Matrix(f, n, n);
  for (unsigned long i = 0; i < n; ++i)
    h->antipode.at((n - i) % n, i) = Scalar::one(f);
  h->pivot = h->unit;
  return finish(h);
}

}  // namespace mtrace
