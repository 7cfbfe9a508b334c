#include "hopf/matrix.hpp"

#include <sstream>

namespace hopf {

Vec zero_vec(int n, const Field& f) { return Vec(static_cast<size_t>(n), Scalar::zero(f)); }

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i].str();
  }
  os << ")";
  return os.str();
}

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols, const Field& f) {
  Matrix m(rows, static_cast<int>(cols.size()), f);
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw dimension_mismatch("column length");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw dimension_mismatch("matrix product shapes");
  if (!(field_ == o.field_)) throw field_mismatch();
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sum shapes");
  Matrix r(rows_, cols_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix difference shapes");
  Matrix r(rows_, cols_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  if (!(field_ == o.field_)) throw field_mismatch();
  Matrix r(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& x = at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) {
          const Scalar& y = o.at(k, l);
          if (y.is_zero()) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = x * y;
        }
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw dimension_mismatch("matrix apply length");
  Vec r = zero_vec(rows_, field_);
  for (int j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& m = at(i, j);
      if (m.is_zero()) continue;
      r[i] += m * x[j];
    }
  }
  return r;
}

Vec Matrix::column(int j) const {
  Vec r = zero_vec(rows_, field_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

struct Echelon {
  Matrix m;                  // reduced row echelon form of [A|B]
  std::vector<int> pivot_col;  // pivot column per pivot row
};

// Gauss-Jordan on the augmented matrix; split marks where A ends.
Echelon rref(const Matrix& aug, int split) {
  Matrix m = aug;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < split && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    Scalar piv = m.at(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      Scalar f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b) {
  if (A.rows() != b.rows()) throw dimension_mismatch("solve_linear: row counts differ");
  if (!(A.field() == b.field())) throw field_mismatch();
  Matrix aug(A.rows(), A.cols() + b.cols(), A.field());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, A.cols() + j) = b.at(i, j);
  }
  Echelon e = rref(aug, A.cols());
  int nr = static_cast<int>(e.pivot_col.size());
  for (int i = nr; i < A.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (!e.m.at(i, A.cols() + j).is_zero()) return std::nullopt;
  Matrix x(A.cols(), b.cols(), A.field());
  for (int r = 0; r < nr; ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivot_col[r], j) = e.m.at(r, A.cols() + j);
  return x;
}

std::optional<Matrix> invert_matrix(const Matrix& A) {
  if (A.rows() != A.cols()) throw dimension_mismatch("invert_matrix: not square");
  auto x = solve_linear(A, Matrix::identity(A.rows(), A.field()));
  if (!x) return std::nullopt;
  if (!(*x * A == Matrix::identity(A.rows(), A.field()))) return std::nullopt;
  return x;
}

int rank(const Matrix& A) {
  Echelon e = rref(A, A.cols());
  return static_cast<int>(e.pivot_col.size());
}

std::vector<Vec> nullspace_basis(const Matrix& A) {
  Echelon e = rref(A, A.cols());
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(A.cols(), A.field());
    v[fc] = Scalar::one(A.field());
    for (size_t r = 0; r < e.pivot_col.size(); ++r)
      v[e.pivot_col[r]] = -e.m.at(static_cast<int>(r), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hopf
