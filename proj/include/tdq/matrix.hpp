#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdq/scalar.hpp"

namespace tdq {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

/// Dense square matrix over the rationals. Acts on column vectors.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t dim);
  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix diagonal(std::span<const Scalar> entries);
  /// Square matrix whose columns are `columns` (must be dim vectors of length dim).
  static Matrix from_columns(std::span<const Vector> columns);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  /// Row-major entries.
  [[nodiscard]] const std::vector<Scalar>& entries() const { return data_; }
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Scalar trace() const;
  [[nodiscard]] Scalar determinant() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] Matrix transpose() const;
  /// Throws ArithmeticError when singular.
  [[nodiscard]] Matrix inverse() const;
  [[nodiscard]] bool invertible() const { return determinant() != Scalar(0); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator/(Matrix a, const Scalar& s) { return a *= s.inverse(); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// m^k; negative k uses the inverse.
Matrix power(const Matrix& m, long long k);

/// XY - YX
Matrix commutator(const Matrix& x, const Matrix& y);
/// [X,Y]_s = sXY - s^{-1}YX
Matrix qcommutator(const Matrix& x, const Matrix& y, const Scalar& s);

void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

}  // namespace tdq
