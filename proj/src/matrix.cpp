#include "tdq/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "tdq/elimination.hpp"

namespace tdq {

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : Matrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("matrix literal is not square");
    std::size_t c = 0;
    for (const auto& x : row) (*this)(r, c++) = x;
    ++r;
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  Matrix m(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != columns.size()) throw DimensionError("from_columns: not square");
    for (std::size_t r = 0; r < columns.size(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_)};
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const { return *this == identity(dim_); }

Scalar Matrix::trace() const {
  Scalar t(0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Scalar Matrix::determinant() const {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim_; ++r) rows.push_back(row(r));
  Scalar det(1);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t p = col;
    while (p < dim_ && rows[p][col].is_zero()) ++p;
    if (p == dim_) return Scalar(0);
    if (p != col) {
      std::swap(rows[p], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    const Scalar inv = rows[col][col].inverse();
    for (std::size_t r = col + 1; r < dim_; ++r) {
      if (rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col] * inv;
      for (std::size_t c = col; c < dim_; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim_; ++r) rows.push_back(row(r));
  return reduce_rows(rows, dim_).size();
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::inverse() const {
  // Gauss-Jordan on [M | I].
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim_; ++r) {
    Vector v = row(r);
    v.resize(2 * dim_, Scalar(0));
    v[dim_ + r] = Scalar(1);
    rows.push_back(std::move(v));
  }
  const auto pivots = reduce_rows(rows, 2 * dim_);
  if (pivots.size() < dim_ || pivots[dim_ - 1] != dim_ - 1) {
    throw ArithmeticError("inverse of singular matrix");
  }
  Matrix inv(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) inv(r, c) = rows[r][dim_ + c];
  return inv;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_dim(*this, o, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_dim(*this, o, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (v.size() != a.dim()) throw DimensionError("matrix-vector product: dimension mismatch");
  Vector out(a.dim(), Scalar(0));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Matrix power(const Matrix& m, long long k) {
  if (k < 0) return power(m.inverse(), -k);
  Matrix result = Matrix::identity(m.dim());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix qcommutator(const Matrix& x, const Matrix& y, const Scalar& s) {
  return s * (x * y) - s.inverse() * (y * x);
}

}  // namespace tdq
