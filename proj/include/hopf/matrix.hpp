#pragma once

#include <optional>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

// Coefficient vector of an algebra element (or a tensor of them, with the
// flat index convention i*n + j for e_i (x) e_j).
using Vec = std::vector<Scalar>;

Vec zero_vec(int n, const Field& f);
bool vec_eq(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const Field& f);
  static Matrix identity(int n, const Field& f);
  static Matrix from_columns(int rows, const std::vector<Vec>& cols, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix&) const;
  Matrix operator+(const Matrix&) const;
  Matrix operator-(const Matrix&) const;
  bool operator==(const Matrix&) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix kron(const Matrix&) const;  // (A kron B)[(i*rB+k)][(j*cB+l)] = A[i][j] B[k][l]
  Vec apply(const Vec& x) const;
  Vec column(int j) const;
  std::string str() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

// Exact solve A x = b (b may have several columns).  Pivoting is leftmost
// column, topmost row; free variables are set to zero.  Returns nothing
// when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b);

std::optional<Matrix> invert_matrix(const Matrix& A);

int rank(const Matrix& A);

// Deterministic basis of the nullspace (free variable set to one in index
// order, pivots back-substituted).
std::vector<Vec> nullspace_basis(const Matrix& A);

}  // namespace hopf
