#include "tdq/report.hpp"

#include <algorithm>

namespace tdq {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::Probe: return "PROBE";
  }
  return "?";
}

std::size_t CheckReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
}

const ReportEntry* CheckReport::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

Matrix columns_as_matrix(std::size_t dim, const std::vector<Vector>& columns) {
  Matrix m(dim);
  for (std::size_t c = 0; c < columns.size() && c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
  return m;
}

void Checker::record(bool ok, const std::string& label, std::optional<Matrix> witness) {
  ++assertions_;
  if (ok || failed_) {
    if (!ok) failed_ = true;
    return;
  }
  failed_ = true;
  first_failure_ = label;
  witness_ = std::move(witness);
}

void Checker::equal(const std::string& label, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    error(label, "dimension mismatch");
    return;
  }
  Matrix diff = lhs - rhs;
  const bool ok = diff.is_zero();
  record(ok, label, ok ? std::nullopt : std::optional<Matrix>(std::move(diff)));
}

void Checker::zero(const std::string& label, const Matrix& m) {
  const bool ok = m.is_zero();
  record(ok, label, ok ? std::nullopt : std::optional<Matrix>(m));
}

void Checker::equal(const std::string& label, const Scalar& lhs, const Scalar& rhs) {
  const bool ok = lhs == rhs;
  record(ok, label, ok ? std::nullopt : std::optional<Matrix>(Matrix{{lhs - rhs}}));
}

void Checker::commute(const std::string& label, const Matrix& x, const Matrix& y) {
  zero(label, commutator(x, y));
}

void Checker::maps_into(const std::string& label, const Matrix& x, const Subspace& from,
                        const Subspace& into) {
  std::vector<Vector> bad;
  for (const auto& v : from.basis()) {
    Vector image = x * v;
    if (!into.contains(image)) bad.push_back(std::move(image));
  }
  const bool ok = bad.empty();
  record(ok, label, ok ? std::nullopt : std::optional<Matrix>(columns_as_matrix(x.dim(), bad)));
}

void Checker::subspace_equal(const std::string& label, const Subspace& lhs, const Subspace& rhs) {
  if (lhs == rhs) {
    record(true, label, std::nullopt);
    return;
  }
  // Witness: basis vectors of either side missing from the other.
  std::vector<Vector> bad;
  for (const auto& v : lhs.basis())
    if (!rhs.contains(v)) bad.push_back(v);
  for (const auto& v : rhs.basis())
    if (!lhs.contains(v)) bad.push_back(v);
  record(false, label, columns_as_matrix(lhs.ambient_dim(), bad));
}

void Checker::holds(const std::string& label, bool ok, std::optional<Matrix> witness) {
  record(ok, label, ok ? std::nullopt : std::move(witness));
}

void Checker::error(const std::string& label, const std::string& message) {
  record(false, label + ": " + message, std::nullopt);
}

ReportEntry Checker::finish(std::string id, std::string anchor, bool probe) const {
  ReportEntry e;
  e.id = std::move(id);
  e.anchor = std::move(anchor);
  e.assertions = assertions_;
  const Status outcome = failed_ ? Status::Fail : Status::Pass;
  if (probe) {
    e.status = Status::Probe;
    e.probe_outcome = assertions_ == 0 ? Status::Inconclusive : outcome;
  } else {
    e.status = outcome;
  }
  if (failed_) {
    e.detail = first_failure_;
    e.witness = witness_;
  }
  return e;
}

}  // namespace tdq
