#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mtrace/matrix.hpp"
#include "mtrace/scalar.hpp"

namespace mtrace {

// An associative unital algebra presented by structure constants on a basis,
// e.g. End(V) of a module.  mult[i * dim + j] holds the coordinates of
// b_i * b_j.
struct AlgebraOnBasis {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::vector<Scalar>> mult;
  std::vector<Scalar> unit;

  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  // Matrix of left multiplication by the element with the given coordinates.
  Matrix left_mult_matrix(const std::vector<Scalar>& a) const;
  // Associativity and unitality on all basis pairs; throws AxiomViolation.
  void validate() const;
};

// Basis of the Jacobson radical J(A), via the trace form of the left regular
// representation (valid in characteristic zero); the returned ideal is
// verified nilpotent.  nilpotency_index is the least k with J^k = 0
// (1 when J = 0).
struct RadicalResult {
  std::vector<std::vector<Scalar>> basis;
  std::size_t nilpotency_index = 1;
};
RadicalResult radical(const AlgebraOnBasis& a);

// Complete orthogonal set of primitive idempotents summing to 1: the
// semisimple quotient A/J is split into primitive idempotents which are then
// lifted through the radical by the iteration e <- 3e^2 - 2e^3.
// Throws NotSplit when a simple block has no rational splitting (enlarge the
// field), UnsupportedCharacteristic over GF(p).
std::vector<std::vector<Scalar>> primitive_idempotents(const AlgebraOnBasis& a,
                                                       unsigned long seed = 1);

// A finite-dimensional pivotal Hopf algebra on a distinguished basis.  All
// structure maps are given by exact structure constants; validate() checks
// every defining axiom on basis elements.
class HopfAlgebra {
 public:
  std::string name;
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  // mult[i * dim + j] = coordinates of b_i b_j
  std::vector<std::vector<Scalar>> mult;
  std::vector<Scalar> unit;
  // comult[i]: dim x dim matrix, entry (j, k) = coefficient of b_j (x) b_k
  std::vector<Matrix> comult;
  std::vector<Scalar> counit;
  // antipode: column j = coordinates of S(b_j)
  Matrix antipode;
  std::vector<Scalar> pivot;

  // Throws AxiomViolation naming the first broken identity:
  // associativity/unit, coassociativity/counit, bialgebra compatibility,
  // antipode identities, and the pivot being grouplike with
  // S^2(a) = g a g^{-1}.
  void validate() const;

  AlgebraOnBasis as_algebra() const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  std::vector<Scalar> basis_vector(std::size_t i) const;
  // Coordinates of S(element).
  std::vector<Scalar> antipode_of(const std::vector<Scalar>& a) const;
  std::vector<Scalar> pivot_inverse() const;

  // Indices of a small subset of the basis that generates the algebra as a
  // unital algebra (intertwiner systems only need these).
  const std::vector<std::size_t>& generating_indices() const;

 private:
  mutable std::vector<std::size_t> gens_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Parse and fully validate a Hopf algebra document (JSON text, schema in the
// README).  Throws SchemaError on malformed input, AxiomViolation with a
// witness when an axiom fails.
HopfPtr load_hopf(const std::string& json_text);

// Built-in algebras.  All go through the same validation as loaded input.
HopfPtr make_sweedler();                    // 4-dimensional, over Q, pivot g
HopfPtr make_taft(unsigned long n);         // n^2-dim over Q(zeta_n), pivot g^{n-1}
HopfPtr make_group_algebra_zn(unsigned long n);  // Z/n; Q for n <= 2, else Q(zeta_n)

// JSON document of an algebra, inverse to load_hopf.
std::string hopf_to_json(const HopfAlgebra& h, bool pretty = false);

}  // namespace mtrace
