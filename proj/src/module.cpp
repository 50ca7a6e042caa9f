#include "mtrace/module.hpp"

#include <algorithm>
#include <random>

#include "mtrace/errors.hpp"

namespace mtrace {

Matrix Module::action_of(const std::vector<Scalar>& elt) const {
  Matrix r(algebra->field, dim, dim);
  for (std::size_t i = 0; i < elt.size(); ++i) {
    if (elt[i].is_zero()) continue;
    r = r + action[i] * elt[i];
  }
  return r;
}

ModulePtr check_module(const HopfPtr& h, std::vector<Matrix> action,
                       std::string name) {
  if (action.size() != h->dim)
    throw NotARepresentation("expected one action matrix per basis element");
  std::size_t d = action.empty() ? 0 : action[0].rows();
  for (const auto& a : action)
    if (a.rows() != d || a.cols() != d || a.field() != h->field)
      throw NotARepresentation("action matrices must be square, uniform, "
                               "over the algebra's field");
  auto m = std::make_shared<Module>();
  m->algebra = h;
  m->dim = d;
  m->action = ActionTable(std::move(action));
  m->name = std::move(name);
  // Unit acts as the identity.
  if (m->action_of(h->unit) != Matrix::identity(h->field, d))
    throw NotARepresentation("unit does not act as the identity");
  // Representation law on every basis pair.
  for (std::size_t i = 0; i < h->dim; ++i)
    for (std::size_t j = 0; j < h->dim; ++j) {
      Matrix lhs = m->action[i] * m->action[j];
      Matrix rhs = m->action_of(h->mult[i * h->dim + j]);
      if (lhs != rhs)
        throw NotARepresentation("action breaks the product of basis (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ")");
    }
  return m;
}

ModulePtr unit_module(const HopfPtr& h) {
  auto m = std::make_shared<Module>();
  m->algebra = h;
  m->dim = 1;
  m->name = "1";
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h->dim; ++i) {
    Matrix a(h->field, 1, 1);
    a.at(0, 0) = h->counit[i];
    action.push_back(std::move(a));
  }
  m->action = ActionTable(std::move(action));
  return m;
}

ModulePtr regular_module(const HopfPtr& h) {
  auto m = std::make_shared<Module>();
  m->algebra = h;
  m->dim = h->dim;
  m->name = "reg";
  auto alg = h->as_algebra();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h->dim; ++i)
    action.push_back(alg.left_mult_matrix(h->basis_vector(i)));
  m->action = ActionTable(std::move(action));
  return m;
}

ModulePtr character_module(const HopfPtr& h, const std::vector<Scalar>& chi,
                           std::string name) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h->dim; ++i) {
    Matrix a(h->field, 1, 1);
    a.at(0, 0) = chi[i];
    action.push_back(std::move(a));
  }
  return check_module(h, std::move(action), std::move(name));
}

ModulePtr tensor(const ModulePtr& m, const ModulePtr& n) {
  if (m->algebra != n->algebra)
    throw AlgebraMismatch("tensor: modules over different algebras");
  const auto& h = *m->algebra;
  auto t = std::make_shared<Module>();
  t->algebra = m->algebra;
  t->dim = m->dim * n->dim;
  t->name = (m->name == "1") ? n->name
            : (n->name == "1") ? m->name
                               : m->name + "(x)" + n->name;
  HopfPtr hp = m->algebra;
  ModulePtr mm = m, nn = n;
  std::size_t td = t->dim;
  t->action = ActionTable(h.dim, [hp, mm, nn, td](std::size_t i) {
    Matrix a(hp->field, td, td);
    const Matrix& c = hp->comult[i];
    for (std::size_t j = 0; j < hp->dim; ++j)
      for (std::size_t k = 0; k < hp->dim; ++k) {
        if (c.at(j, k).is_zero()) continue;
        a = a + kron(mm->action[j], nn->action[k]) * c.at(j, k);
      }
    return a;
  });
  return t;
}

ModulePtr dual(const ModulePtr& m) {
  auto d = std::make_shared<Module>();
  d->algebra = m->algebra;
  d->dim = m->dim;
  d->name = "dual(" + m->name + ")";
  HopfPtr hp = m->algebra;
  ModulePtr mm = m;
  d->action = ActionTable(hp->dim, [hp, mm](std::size_t i) {
    return mm->action_of(hp->antipode_of(hp->basis_vector(i))).transpose();
  });
  return d;
}

ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n) {
  if (m->algebra != n->algebra)
    throw AlgebraMismatch("direct_sum: modules over different algebras");
  auto s = std::make_shared<Module>();
  s->algebra = m->algebra;
  s->dim = m->dim + n->dim;
  s->name = m->name + "+" + n->name;
  HopfPtr hp = m->algebra;
  ModulePtr mm = m, nn = n;
  s->action = ActionTable(hp->dim, [hp, mm, nn](std::size_t i) {
    Matrix a(hp->field, mm->dim + nn->dim, mm->dim + nn->dim);
    for (std::size_t r = 0; r < mm->dim; ++r)
      for (std::size_t c = 0; c < mm->dim; ++c)
        a.at(r, c) = mm->action[i].at(r, c);
    for (std::size_t r = 0; r < nn->dim; ++r)
      for (std::size_t c = 0; c < nn->dim; ++c)
        a.at(mm->dim + r, mm->dim + c) = nn->action[i].at(r, c);
    return a;
  });
  return s;
}

Morphism identity(const ModulePtr& m) {
  return {m, m, Matrix::identity(m->algebra->field, m->dim)};
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.dom->dim != g.cod->dim || f.dom->algebra != g.cod->algebra)
    throw ShapeMismatch("compose: inner objects differ");
  return {g.dom, f.cod, f.mat * g.mat};
}

Morphism tensor_mor(const Morphism& f, const Morphism& g) {
  return {tensor(f.dom, g.dom), tensor(f.cod, g.cod), kron(f.mat, g.mat)};
}

Morphism morphism(const ModulePtr& dom, const ModulePtr& cod, Matrix mat) {
  if (mat.rows() != cod->dim || mat.cols() != dom->dim)
    throw ShapeMismatch("morphism: matrix is " + std::to_string(mat.rows()) +
                        "x" + std::to_string(mat.cols()) + ", expected " +
                        std::to_string(cod->dim) + "x" +
                        std::to_string(dom->dim));
  return {dom, cod, std::move(mat)};
}

bool is_morphism(const Morphism& f) {
  const auto& h = *f.dom->algebra;
  for (auto i : h.generating_indices())
    if (f.mat * f.dom->action[i] != f.cod->action[i] * f.mat) return false;
  return true;
}

std::vector<Morphism> hom_space(const ModulePtr& m, const ModulePtr& n) {
  if (m->algebra != n->algebra)
    throw AlgebraMismatch("hom_space: modules over different algebras");
  const auto& h = *m->algebra;
  const auto& gens = h.generating_indices();
  std::size_t unknowns = n->dim * m->dim;  // vec(F), row-major
  Matrix sys(h.field, gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (auto gi : gens) {
    const Matrix& am = m->action[gi];
    const Matrix& an = n->action[gi];
    // (F am - an F)[r, c] = 0
    for (std::size_t r = 0; r < n->dim; ++r)
      for (std::size_t c = 0; c < m->dim; ++c) {
        for (std::size_t k = 0; k < m->dim; ++k) {
          const Scalar& x = am.at(k, c);
          if (!x.is_zero()) sys.at(row, r * m->dim + k) += x;
        }
        for (std::size_t k = 0; k < n->dim; ++k) {
          const Scalar& x = an.at(r, k);
          if (!x.is_zero()) sys.at(row, k * m->dim + c) -= x;
        }
        ++row;
      }
  }
  std::vector<Morphism> basis;
  for (const auto& k : kernel_basis(sys))
    basis.push_back({m, n, Matrix::unvec(k, n->dim, m->dim)});
  return basis;
}

AlgebraOnBasis endomorphism_algebra(const ModulePtr& m) {
  auto ends = hom_space(m, m);
  AlgebraOnBasis a;
  a.field = m->algebra->field;
  a.dim = ends.size();
  a.mult.resize(a.dim * a.dim);
  if (a.dim == 0) return a;
  Matrix basis_mat(a.field, m->dim * m->dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    Matrix v = ends[j].mat.vec();
    for (std::size_t i = 0; i < v.rows(); ++i) basis_mat.at(i, j) = v.at(i, 0);
  }
  Matrix rhs(a.field, m->dim * m->dim, a.dim * a.dim + 1);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix p = (ends[i].mat * ends[j].mat).vec();
      for (std::size_t r = 0; r < p.rows(); ++r)
        rhs.at(r, i * a.dim + j) = p.at(r, 0);
    }
  Matrix idv = Matrix::identity(a.field, m->dim).vec();
  for (std::size_t r = 0; r < idv.rows(); ++r)
    rhs.at(r, a.dim * a.dim) = idv.at(r, 0);
  auto sol = solve_all(basis_mat, rhs);
  if (!sol.particular)
    throw Error("endomorphism products escaped the hom space");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::vector<Scalar> coords(a.dim);
      for (std::size_t t = 0; t < a.dim; ++t)
        coords[t] = sol.particular->at(t, i * a.dim + j);
      a.mult[i * a.dim + j] = std::move(coords);
    }
  a.unit.resize(a.dim);
  for (std::size_t t = 0; t < a.dim; ++t)
    a.unit[t] = sol.particular->at(t, a.dim * a.dim);
  return a;
}

std::pair<ModulePtr, Morphism> submodule(const ModulePtr& m,
                                         const std::vector<Matrix>& cols,
                                         std::string name) {
  auto basis = column_space_basis(cols);
  const FieldSpec f = m->algebra->field;
  std::size_t d = basis.size();
  Matrix b(f, m->dim, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < m->dim; ++i) b.at(i, j) = basis[j].at(i, 0);
  auto s = std::make_shared<Module>();
  s->algebra = m->algebra;
  s->dim = d;
  s->name = std::move(name);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m->action.size(); ++i) {
    auto sol = solve_all(b, m->action[i] * b);
    if (!sol.particular)
      throw Error("submodule: span is not action-invariant");
    action.push_back(*sol.particular);
  }
  s->action = ActionTable(std::move(action));
  return {s, Morphism{s, m, b}};
}

Decomposition decompose(const ModulePtr& m, unsigned long seed) {
  Decomposition dec;
  if (m->dim == 0) return dec;
  auto ends = hom_space(m, m);
  if (ends.size() == 1) {
    dec.summands = {m};
    dec.injections = {identity(m)};
    dec.projections = {identity(m)};
    return dec;
  }
  auto alg = endomorphism_algebra(m);
  auto idems = primitive_idempotents(alg, seed);
  const FieldSpec f = m->algebra->field;

  // Image bases of each idempotent, concatenated into a base change.
  std::vector<Matrix> image_bases;
  std::vector<std::size_t> dims;
  Matrix u(f, m->dim, m->dim);
  std::size_t col = 0;
  for (const auto& coords : idems) {
    Matrix e(f, m->dim, m->dim);
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (coords[t].is_zero()) continue;
      e = e + ends[t].mat * coords[t];
    }
    std::vector<Matrix> columns;
    for (std::size_t j = 0; j < m->dim; ++j) {
      Matrix c(f, m->dim, 1);
      for (std::size_t i = 0; i < m->dim; ++i) c.at(i, 0) = e.at(i, j);
      columns.push_back(std::move(c));
    }
    auto basis = column_space_basis(columns);
    dims.push_back(basis.size());
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < m->dim; ++i) u.at(i, col) = v.at(i, 0);
      ++col;
    }
  }
  if (col != m->dim) throw Error("decompose: images do not fill the module");
  Matrix uinv = u.inverse();

  std::size_t offset = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    std::size_t d = dims[s];
    Matrix inj(f, m->dim, d);
    for (std::size_t i = 0; i < m->dim; ++i)
      for (std::size_t j = 0; j < d; ++j) inj.at(i, j) = u.at(i, offset + j);
    Matrix proj(f, d, m->dim);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < m->dim; ++j)
        proj.at(i, j) = uinv.at(offset + i, j);
    auto part = std::make_shared<Module>();
    part->algebra = m->algebra;
    part->dim = d;
    part->name = m->name + "." + std::to_string(s);
    {
      std::vector<Matrix> pact;
      for (std::size_t ai = 0; ai < m->action.size(); ++ai)
        pact.push_back(proj * m->action[ai] * inj);
      part->action = ActionTable(std::move(pact));
    }
    dec.summands.push_back(part);
    dec.injections.push_back(Morphism{part, m, inj});
    dec.projections.push_back(Morphism{m, part, proj});
    offset += d;
  }
  return dec;
}

AbsIndecReport abs_indec_report(const ModulePtr& m) {
  if (!m->algebra->field.characteristic_zero())
    throw UnsupportedCharacteristic(
        "absolute indecomposability needs characteristic zero");
  AbsIndecReport rep;
  auto alg = endomorphism_algebra(m);
  rep.dim_end = alg.dim;
  auto rad = radical(alg);
  rep.dim_rad = rad.basis.size();
  rep.nilpotency_index = rad.nilpotency_index;
  rep.is_abs_indec = (rep.dim_end - rep.dim_rad == 1);
  return rep;
}

bool is_simple(const ModulePtr& m) {
  if (m->dim == 0) return false;
  auto rep = abs_indec_report(m);
  if (!rep.is_abs_indec || rep.dim_rad != 0) return false;
  // Orbit closure of each basis vector must be everything.
  const FieldSpec f = m->algebra->field;
  for (std::size_t j = 0; j < m->dim; ++j) {
    std::vector<Matrix> span;
    Matrix e(f, m->dim, 1);
    e.at(j, 0) = Scalar::one(f);
    span.push_back(e);
    for (;;) {
      std::vector<Matrix> next = span;
      for (const auto& v : span)
        for (std::size_t ai = 0; ai < m->action.size(); ++ai)
          next.push_back(m->action[ai] * v);
      auto grown = column_space_basis(next);
      if (grown.size() == span.size()) break;
      span = std::move(grown);
    }
    if (span.size() != m->dim) return false;
  }
  return true;
}

SocleHead socle_head(const ModulePtr& m, unsigned long seed) {
  const auto& h = *m->algebra;
  if (!h.field.characteristic_zero())
    throw UnsupportedCharacteristic("socle/head need characteristic zero");
  auto hrad = radical(h.as_algebra());
  const FieldSpec f = h.field;
  SocleHead sh;

  // Socle: common kernel of the radical action.
  Matrix stacked(f, hrad.basis.size() * m->dim, m->dim);
  for (std::size_t r = 0; r < hrad.basis.size(); ++r) {
    Matrix a = m->action_of(hrad.basis[r]);
    for (std::size_t i = 0; i < m->dim; ++i)
      for (std::size_t j = 0; j < m->dim; ++j)
        stacked.at(r * m->dim + i, j) = a.at(i, j);
  }
  auto soc = submodule(m, kernel_basis(stacked), "socle(" + m->name + ")");
  sh.socle = soc.first;
  sh.socle_inclusion = soc.second;
  sh.socle_parts = decompose(sh.socle, seed);

  // Head: quotient by J(H) M, presented on the non-pivot coordinates of the
  // RREF of J(H) M.
  std::vector<Matrix> jm_cols;
  for (const auto& rv : hrad.basis) {
    Matrix a = m->action_of(rv);
    for (std::size_t j = 0; j < m->dim; ++j) {
      Matrix c(f, m->dim, 1);
      for (std::size_t i = 0; i < m->dim; ++i) c.at(i, 0) = a.at(i, j);
      jm_cols.push_back(std::move(c));
    }
  }
  auto jm_basis = column_space_basis(jm_cols);
  Matrix rows(f, jm_basis.size(), m->dim);
  for (std::size_t i = 0; i < jm_basis.size(); ++i)
    for (std::size_t j = 0; j < m->dim; ++j)
      rows.at(i, j) = jm_basis[i].at(j, 0);
  auto r = rref(rows);
  std::vector<bool> is_pivot(m->dim, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < m->dim; ++c)
    if (!is_pivot[c]) comp.push_back(c);

  // Base change [JM basis | complement] and its inverse give the projection.
  std::size_t k = jm_basis.size();
  Matrix u(f, m->dim, m->dim);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m->dim; ++i) u.at(i, j) = jm_basis[j].at(i, 0);
  for (std::size_t j = 0; j < comp.size(); ++j)
    u.at(comp[j], k + j) = Scalar::one(f);
  Matrix uinv = u.inverse();
  Matrix proj = uinv.row_slice(k, m->dim);  // head coords
  Matrix sect(f, m->dim, comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j)
    sect.at(comp[j], j) = Scalar::one(f);

  auto head = std::make_shared<Module>();
  head->algebra = m->algebra;
  head->dim = comp.size();
  head->name = "head(" + m->name + ")";
  {
    std::vector<Matrix> hact;
    for (std::size_t ai = 0; ai < m->action.size(); ++ai)
      hact.push_back(proj * m->action[ai] * sect);
    head->action = ActionTable(std::move(hact));
  }
  sh.head = head;
  sh.head_projection = Morphism{m, head, proj};
  sh.head_parts = decompose(sh.head, seed);
  return sh;
}

std::optional<Morphism> find_isomorphism(const ModulePtr& m,
                                         const ModulePtr& n,
                                         unsigned long seed) {
  if (m->dim != n->dim || m->algebra != n->algebra) return std::nullopt;
  const FieldSpec fld = m->algebra->field;
  if (m->dim == 0)
    return Morphism{m, n, Matrix::zero(fld, 0, 0)};
  auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  for (const auto& f : homs)
    if (f.mat.is_invertible()) return f;
  Matrix acc(fld, n->dim, m->dim);
  for (std::size_t k = 0; k < homs.size(); ++k) {
    acc = acc + homs[k].mat;
    if (acc.is_invertible()) return Morphism{m, n, acc};
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix z(fld, n->dim, m->dim);
    for (const auto& f : homs) {
      long c = static_cast<long>(rng() % 11) - 5;
      if (c == 0) continue;
      z = z + f.mat * Scalar::from_int(fld, c);
    }
    if (z.is_invertible()) return Morphism{m, n, z};
  }
  return std::nullopt;
}

Decomposition regular_decomposition(const HopfPtr& h, unsigned long seed) {
  return decompose(regular_module(h), seed);
}

ProjectiveCoverUnit projective_cover_unit(const HopfPtr& h,
                                          unsigned long seed) {
  auto unit = unit_module(h);
  auto dec = regular_decomposition(h, seed);
  for (const auto& summand : dec.summands) {
    auto sh = socle_head(summand, seed);
    if (sh.head->dim != 1) continue;
    bool is_unit_head = true;
    for (std::size_t i = 0; i < h->dim; ++i)
      if (sh.head->action[i] != unit->action[i]) {
        is_unit_head = false;
        break;
      }
    if (!is_unit_head) continue;
    ProjectiveCoverUnit out;
    out.cover = summand;
    out.head = sh.head;
    out.eps = sh.head_projection;
    out.socle = sh.socle;
    out.eta = sh.socle_inclusion;
    if (sh.socle_parts.summands.size() != 1)
      throw Error("projective cover of the unit has a non-simple socle");
    return out;
  }
  throw Error("no summand of the regular module has unit head");
}

}  // namespace mtrace
