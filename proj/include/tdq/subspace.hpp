#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "tdq/matrix.hpp"

namespace tdq {

/// Subspace of Q^n held as its reduced echelon basis (leading ones, zeros in
/// the other vectors' pivot positions). The basis is canonical, so equality of
/// subspaces is equality of representation.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(std::size_t ambient_dim);
  /// Column space of m.
  static Subspace image(const Matrix& m);
  /// {x : m x = 0}
  static Subspace kernel(const Matrix& m);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contained_in(const Subspace& other) const;
  /// m applied to this subspace.
  [[nodiscard]] Subspace mapped_by(const Matrix& m) const;

  friend Subspace operator+(const Subspace& u, const Subspace& v);
  friend Subspace intersect(const Subspace& u, const Subspace& v);
  friend bool operator==(const Subspace& u, const Subspace& v) = default;
  friend std::ostream& operator<<(std::ostream& os, const Subspace& s);

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace intersect(const Subspace& u, const Subspace& v);

/// True when the subspaces are independent and together span the ambient space.
bool is_direct_sum_decomposition(std::span<const Subspace> parts);

}  // namespace tdq
