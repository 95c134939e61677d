#pragma once

#include <cstddef>
#include <vector>

#include "tdq/matrix.hpp"

namespace tdq {

/// Brings `rows` to reduced row-echelon form in place (leading ones, zeros
/// above and below every pivot) and drops zero rows. Pivot choice is the
/// first nonzero entry found. Returns the pivot column of each kept row.
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t width);

/// Basis of {v : sum_i v_i * rows[i] = 0}, i.e. the left null space of the
/// row list, as coefficient vectors of length rows.size().
std::vector<Vector> left_null_space(const std::vector<Vector>& rows, std::size_t width);

/// Basis of {x : M x = 0} for a (rows x width) system given row-wise.
std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t width);

/// Echelon basis that grows one vector at a time; used for span closures.
class IncrementalBasis {
public:
  explicit IncrementalBasis(std::size_t width) : width_(width) {}

  /// Adds v if it is independent of the current basis; returns whether it was.
  bool add(const Vector& v);
  /// Remainder of v after elimination against the basis (zero iff v is in the span).
  [[nodiscard]] Vector reduce(Vector v) const;
  [[nodiscard]] std::size_t size() const { return rows_.size(); }

private:
  std::size_t width_;
  std::vector<Vector> rows_;  ///< sorted by pivot, leading entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace tdq
