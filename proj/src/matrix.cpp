#include "mtrace/matrix.hpp"

#include <sstream>

namespace mtrace {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::column(const FieldSpec& f, const std::vector<Scalar>& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix add: shapes differ");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix product: field differs");
  if (cols_ != o.rows_)
    throw DimensionMismatch("matrix product: " + std::to_string(cols_) +
                            " inner vs " + std::to_string(o.rows_));
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::size_t Matrix::rank() const { return rref(*this).rank; }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  auto sol = solve_all(*this, identity(field_, rows_));
  if (!sol.particular || !sol.kernel_basis.empty())
    throw Error("matrix is not invertible");
  return *sol.particular;
}

Matrix Matrix::row_slice(std::size_t r0, std::size_t r1) const {
  Matrix r(field_, r1 - r0, cols_);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hcat: row counts differ");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vec() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (std::size_t i = 0; i < e_.size(); ++i) v.at(i, 0) = e_[i];
  return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw DimensionMismatch("unvec: size mismatch");
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    m.at(i / cols, i % cols) = v.at(i, 0);
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Leading nonzero pivot; exact field, no pivot strategy needed.
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(row, j));
    Scalar pinv = a.at(row, col).inv();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= pinv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a.at(row, j).is_zero()) continue;
        a.at(i, j) -= factor * a.at(row, j);
      }
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

SolutionSet solve_all(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows())
    throw DimensionMismatch("solve_all: A has " + std::to_string(A.rows()) +
                            " rows, B has " + std::to_string(B.rows()));
  if (A.field() != B.field()) throw FieldMismatch("solve_all: field differs");
  auto r = rref(A.hcat(B));
  SolutionSet sol;
  const Matrix& e = r.reduced;
  std::size_t n = A.cols();

  // Inconsistent iff some pivot falls in the B block.
  for (auto p : r.pivots)
    if (p >= n) return sol;

  std::vector<long> pivot_of_col(n, -1);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    pivot_of_col[r.pivots[i]] = static_cast<long>(i);

  // Canonical particular solution: free variables set to zero.
  Matrix part(A.field(), n, B.cols());
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] < 0) continue;
    std::size_t prow = static_cast<std::size_t>(pivot_of_col[c]);
    for (std::size_t j = 0; j < B.cols(); ++j)
      part.at(c, j) = e.at(prow, n + j);
  }
  sol.particular = std::move(part);

  // Kernel basis: one vector per free column, canonical back-substitution.
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Matrix k(A.field(), n, 1);
    k.at(c, 0) = Scalar::one(A.field());
    for (std::size_t pc = 0; pc < n; ++pc) {
      if (pivot_of_col[pc] < 0) continue;
      std::size_t prow = static_cast<std::size_t>(pivot_of_col[pc]);
      k.at(pc, 0) = -e.at(prow, c);
    }
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

std::vector<Matrix> kernel_basis(const Matrix& A) {
  return solve_all(A, Matrix::zero(A.field(), A.rows(), 1)).kernel_basis;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron: field differs");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& t = b.at(k, l);
          if (t.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = s * t;
        }
    }
  return r;
}

std::vector<Matrix> column_space_basis(const std::vector<Matrix>& vecs) {
  if (vecs.empty()) return {};
  const FieldSpec f = vecs[0].field();
  std::size_t dim = vecs[0].rows();
  Matrix stacked(f, vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].cols() != 1 || vecs[i].rows() != dim)
      throw DimensionMismatch("column_space_basis: ragged input");
    for (std::size_t j = 0; j < dim; ++j) stacked.at(i, j) = vecs[i].at(j, 0);
  }
  auto r = rref(stacked);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < r.rank; ++i) {
    Matrix v(f, dim, 1);
    for (std::size_t j = 0; j < dim; ++j) v.at(j, 0) = r.reduced.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mtrace
