#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mtrace/scalar.hpp"

namespace mtrace {

// Dense exact matrix over one of the supported fields.  0 x n and n x 0
// shapes are legal; they carry morphisms into or out of zero-dimensional
// spaces.
class Matrix {
 public:
  Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }
  // Column vector from entries.
  static Matrix column(const FieldSpec& f, const std::vector<Scalar>& v);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const { return e_; }

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // matrix product
  Matrix operator*(const Scalar& s) const;  // scalar multiple
  Matrix operator-() const;
  Matrix transpose() const;

  Scalar trace() const;
  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  // Inverse of a square invertible matrix.
  Matrix inverse() const;
  // Rows r0..r1-1 as a new matrix.
  Matrix row_slice(std::size_t r0, std::size_t r1) const;
  // Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const;
  // This matrix reshaped as one column, row-major.
  Matrix vec() const;
  // Inverse of vec: a rows x cols matrix from a column vector.
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  std::string str() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

// Reduced row-echelon form by Gauss-Jordan with leading-nonzero pivoting.
RrefResult rref(const Matrix& m);

// Full affine solution set of A * X = B, column-wise: every solution is
// particular + span(kernel_basis), applied per column of B.
struct SolutionSet {
  std::optional<Matrix> particular;  // one solution; nullopt iff inconsistent
  std::vector<Matrix> kernel_basis;  // basis of solutions of A * x = 0,
                                     // as column vectors
};

SolutionSet solve_all(const Matrix& A, const Matrix& B);

// Basis of the null space of A, as column vectors.
std::vector<Matrix> kernel_basis(const Matrix& A);

// Kronecker product with ordering (i, j) -> i * cols_B + j, which makes
// nested products strictly associative.
Matrix kron(const Matrix& a, const Matrix& b);

// Basis (as column vectors) of the span of the given column vectors,
// chosen canonically: RREF of the transpose, transposed back.
std::vector<Matrix> column_space_basis(const std::vector<Matrix>& vecs);

}  // namespace mtrace
