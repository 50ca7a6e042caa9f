#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mtrace/hopf.hpp"
#include "mtrace/matrix.hpp"

namespace mtrace {

// One action matrix per algebra basis element, built on first access.
// Tensor products and duals of large modules are handed around freely; only
// the matrices an algorithm actually touches are ever materialized.
class ActionTable {
 public:
  ActionTable() = default;
  explicit ActionTable(std::vector<Matrix> eager)
      : n_(eager.size()), state_(std::make_shared<State>()) {
    for (auto& m : eager)
      state_->slots.push_back(std::make_shared<const Matrix>(std::move(m)));
  }
  ActionTable(std::size_t n, std::function<Matrix(std::size_t)> builder)
      : n_(n), builder_(std::move(builder)),
        state_(std::make_shared<State>()) {
    state_->slots.assign(n, nullptr);
  }

  std::size_t size() const { return n_; }
  const Matrix& operator[](std::size_t i) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& slot = state_->slots[i];
    if (!slot) slot = std::make_shared<const Matrix>(builder_(i));
    return *slot;
  }

 private:
  struct State {
    std::mutex mu;
    std::vector<std::shared_ptr<const Matrix>> slots;
  };
  std::size_t n_ = 0;
  std::function<Matrix(std::size_t)> builder_;
  std::shared_ptr<State> state_;
};

// A finite-dimensional left module.  Immutable after construction; shared by
// pointer.
struct Module {
  HopfPtr algebra;
  std::size_t dim = 0;
  ActionTable action;
  std::string name;

  // Action of an arbitrary element given by coordinates.
  Matrix action_of(const std::vector<Scalar>& elt) const;
  Matrix pivot_action() const { return action_of(algebra->pivot); }
  Matrix pivot_inverse_action() const {
    return action_of(algebra->pivot_inverse());
  }
};

using ModulePtr = std::shared_ptr<const Module>;

struct Morphism {
  ModulePtr dom;
  ModulePtr cod;
  Matrix mat;  // cod.dim x dom.dim

  bool is_zero() const { return mat.is_zero(); }
};

// Validates the representation law on all basis pairs and the unit; throws
// NotARepresentation with a witness pair.
ModulePtr check_module(const HopfPtr& h, std::vector<Matrix> action,
                       std::string name = "");

// Constructors that are valid by construction (no re-validation).
ModulePtr unit_module(const HopfPtr& h);            // k_eps via the counit
ModulePtr regular_module(const HopfPtr& h);         // H acting on itself
// One-dimensional module from a character given as scalars on the basis.
ModulePtr character_module(const HopfPtr& h, const std::vector<Scalar>& chi,
                           std::string name);
ModulePtr tensor(const ModulePtr& m, const ModulePtr& n);
ModulePtr dual(const ModulePtr& m);
ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n);

Morphism identity(const ModulePtr& m);
Morphism compose(const Morphism& f, const Morphism& g);       // f after g
Morphism tensor_mor(const Morphism& f, const Morphism& g);    // f (x) g
Morphism morphism(const ModulePtr& dom, const ModulePtr& cod, Matrix mat);

// Exact intertwiner check (against generator actions).
bool is_morphism(const Morphism& f);

// Basis of Hom(M, N), canonical (RREF kernel of the vectorized intertwiner
// system over a generating set of the algebra).
std::vector<Morphism> hom_space(const ModulePtr& m, const ModulePtr& n);

struct Decomposition {
  std::vector<ModulePtr> summands;
  std::vector<Morphism> injections;   // summand -> whole
  std::vector<Morphism> projections;  // whole -> summand
};

// Indecomposable direct-sum decomposition via primitive idempotents of
// End(M).  Characteristic zero and split End required.
Decomposition decompose(const ModulePtr& m, unsigned long seed = 1);

struct AbsIndecReport {
  bool is_abs_indec = false;
  std::size_t dim_end = 0;
  std::size_t dim_rad = 0;
  std::size_t nilpotency_index = 1;
};
AbsIndecReport abs_indec_report(const ModulePtr& m);

// End(M)/J(End(M)) = k with zero radical, plus no proper nonzero submodule
// generated by a basis vector.
bool is_simple(const ModulePtr& m);

// The submodule annihilated by J(H) and the quotient by J(H) M, each with
// its structural morphism and decomposed into simples.
struct SocleHead {
  ModulePtr socle;
  Morphism socle_inclusion;  // socle -> M
  Decomposition socle_parts;
  ModulePtr head;
  Morphism head_projection;  // M -> head
  Decomposition head_parts;
};
SocleHead socle_head(const ModulePtr& m, unsigned long seed = 1);

// An invertible element of Hom(M, N) when one exists: basis elements first,
// then partial sums, then seeded random small combinations.
std::optional<Morphism> find_isomorphism(const ModulePtr& m,
                                         const ModulePtr& n,
                                         unsigned long seed = 1);

// The indecomposable projective with head = unit, from the regular module,
// with its socle (alpha), head (beta = unit), socle inclusion eta and head
// projection epsilon.
struct ProjectiveCoverUnit {
  ModulePtr cover;   // P
  ModulePtr socle;   // alpha
  ModulePtr head;    // beta, presented exactly as the unit module
  Morphism eta;      // alpha -> P
  Morphism eps;      // P -> beta
};
ProjectiveCoverUnit projective_cover_unit(const HopfPtr& h,
                                          unsigned long seed = 1);

// Decomposition of the regular module, cached per algebra elsewhere; this
// recomputes.  Summand order is deterministic.
Decomposition regular_decomposition(const HopfPtr& h, unsigned long seed = 1);

// End(M) as an algebra on the hom_space basis.
AlgebraOnBasis endomorphism_algebra(const ModulePtr& m);

// Submodule spanned by the columns of `cols` (must be action-invariant);
// returns the module on the column-space basis with its inclusion.
std::pair<ModulePtr, Morphism> submodule(const ModulePtr& m,
                                         const std::vector<Matrix>& cols,
                                         std::string name);

}  // namespace mtrace
