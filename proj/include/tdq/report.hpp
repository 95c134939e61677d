#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdq/matrix.hpp"
#include "tdq/subspace.hpp"

namespace tdq {

enum class Status { Pass, Fail, Inconclusive, Probe };

const char* to_string(Status s);

/// One line of a report. Probe entries carry their own outcome (PASS, FAIL
/// or INCONCLUSIVE) in `probe_outcome` and never count as failures.
struct ReportEntry {
  std::string id;
  std::string anchor;
  Status status = Status::Pass;
  std::optional<Status> probe_outcome;
  std::size_t assertions = 0;
  std::string detail;  ///< label of the first failing assertion, or an error message
  std::optional<Matrix> witness;
};

struct CheckReport {
  std::string fixture;
  std::vector<ReportEntry> entries;
  double elapsed_seconds = 0.0;

  [[nodiscard]] std::size_t count(Status s) const;
  [[nodiscard]] bool ok() const { return count(Status::Fail) == 0; }
  [[nodiscard]] const ReportEntry* find(const std::string& id) const;
};

/// Collects exact assertions for one report entry. The first failure is kept
/// as the witness; later assertions still run so the count is complete.
class Checker {
public:
  /// lhs == rhs; witness lhs - rhs.
  void equal(const std::string& label, const Matrix& lhs, const Matrix& rhs);
  void zero(const std::string& label, const Matrix& m);
  void equal(const std::string& label, const Scalar& lhs, const Scalar& rhs);
  /// [x, y] = 0
  void commute(const std::string& label, const Matrix& x, const Matrix& y);
  /// x maps `from` into `into`; witness has the offending images as columns.
  void maps_into(const std::string& label, const Matrix& x, const Subspace& from,
                 const Subspace& into);
  void subspace_equal(const std::string& label, const Subspace& lhs, const Subspace& rhs);
  /// Boolean assertion with an optional witness.
  void holds(const std::string& label, bool ok, std::optional<Matrix> witness = std::nullopt);
  /// Records an evaluation error (e.g. a singular inverse) as a failure.
  void error(const std::string& label, const std::string& message);

  [[nodiscard]] bool failed() const { return failed_; }
  [[nodiscard]] std::size_t assertions() const { return assertions_; }
  [[nodiscard]] const std::string& first_failure() const { return first_failure_; }
  [[nodiscard]] const std::optional<Matrix>& witness() const { return witness_; }

  /// Folds the outcome into a report entry.
  [[nodiscard]] ReportEntry finish(std::string id, std::string anchor, bool probe = false) const;

private:
  void record(bool ok, const std::string& label, std::optional<Matrix> witness);

  bool failed_ = false;
  std::size_t assertions_ = 0;
  std::string first_failure_;
  std::optional<Matrix> witness_;
};

/// Matrix whose columns are the given vectors, zero-padded to a square.
Matrix columns_as_matrix(std::size_t dim, const std::vector<Vector>& columns);

}  // namespace tdq
