#include "tdq/elimination.hpp"

#include <utility>

namespace tdq {

std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const Scalar inv = rows[next][col].inverse();
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= f * rows[next][c];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t width) {
  std::vector<Vector> reduced = rows;
  const auto pivots = reduce_rows(reduced, width);
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vector v(width, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_null_space(const std::vector<Vector>& rows, std::size_t width) {
  // Transpose: columns of the transposed system are the given rows.
  std::vector<Vector> transposed(width, Vector(rows.size(), Scalar(0)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) transposed[c][r] = rows[r][c];
  return null_space(transposed, rows.size());
}

Vector IncrementalBasis::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar f = v[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[k]; c < width_; ++c) v[c] -= f * rows_[k][c];
  }
  return v;
}

bool IncrementalBasis::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t lead = 0;
  while (lead < width_ && r[lead].is_zero()) ++lead;
  if (lead == width_) return false;
  const Scalar inv = r[lead].inverse();
  for (std::size_t c = lead; c < width_; ++c) r[c] *= inv;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

}  // namespace tdq
