#include "tdq/subspace.hpp"

#include <ostream>

#include "tdq/elimination.hpp"

namespace tdq {

namespace {

void require_ambient(const Subspace& u, const Subspace& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionError(std::string(what) + ": ambient dimension mismatch");
  }
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionError("span: vector length mismatch");
  }
  s.basis_.assign(vectors.begin(), vectors.end());
  reduce_rows(s.basis_, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim, Scalar(0));
    e[i] = Scalar(1);
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.dim(); ++c) cols.push_back(m.column(c));
  return span(m.dim(), cols);
}

Subspace Subspace::kernel(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.dim(); ++r) rows.push_back(m.row(r));
  const auto basis = null_space(rows, m.dim());
  return span(m.dim(), basis);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: vector length mismatch");
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return reduce_rows(rows, ambient_).size() == basis_.size();
}

bool Subspace::contained_in(const Subspace& other) const {
  require_ambient(*this, other, "containment");
  for (const auto& v : basis_)
    if (!other.contains(v)) return false;
  return true;
}

Subspace Subspace::mapped_by(const Matrix& m) const {
  if (m.dim() != ambient_) throw DimensionError("mapped_by: dimension mismatch");
  std::vector<Vector> images;
  for (const auto& v : basis_) images.push_back(m * v);
  return span(ambient_, images);
}

Subspace operator+(const Subspace& u, const Subspace& v) {
  require_ambient(u, v, "subspace sum");
  std::vector<Vector> all = u.basis_;
  all.insert(all.end(), v.basis_.begin(), v.basis_.end());
  return Subspace::span(u.ambient_, all);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_ambient(u, v, "subspace intersection");
  // Solve sum_i alpha_i u_i - sum_j beta_j v_j = 0; the kernel coordinates
  // alpha give the intersection.
  const std::size_t k = u.dim();
  std::vector<Vector> stacked;
  for (const auto& x : u.basis()) stacked.push_back(x);
  for (const auto& y : v.basis()) {
    Vector neg = y;
    for (auto& e : neg) e = -e;
    stacked.push_back(std::move(neg));
  }
  const auto relations = left_null_space(stacked, u.ambient_dim());
  std::vector<Vector> vectors;
  for (const auto& rel : relations) {
    Vector w(u.ambient_dim(), Scalar(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (rel[i].is_zero()) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] += rel[i] * u.basis()[i][c];
    }
    vectors.push_back(std::move(w));
  }
  return Subspace::span(u.ambient_dim(), vectors);
}

bool is_direct_sum_decomposition(std::span<const Subspace> parts) {
  if (parts.empty()) return false;
  const std::size_t n = parts.front().ambient_dim();
  std::size_t total = 0;
  Subspace sum(n);
  for (const auto& p : parts) {
    if (p.ambient_dim() != n) throw DimensionError("decomposition: ambient dimension mismatch");
    total += p.dim();
    sum = sum + p;
  }
  return total == n && sum.dim() == n;
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  for (std::size_t i = 0; i < s.basis_.size(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t c = 0; c < s.ambient_; ++c) os << (c ? "," : "") << s.basis_[i][c];
    os << ')';
  }
  return os << '}';
}

}  // namespace tdq
