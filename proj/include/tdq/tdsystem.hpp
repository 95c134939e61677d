#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdq/matrix.hpp"
#include "tdq/report.hpp"
#include "tdq/subspace.hpp"

namespace tdq {

/// Raised when input does not form a TD system of q-Racah type. Carries the
/// axiom report when one was produced.
class TDSystemError : public std::runtime_error {
public:
  explicit TDSystemError(const std::string& what, CheckReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const CheckReport& report() const { return report_; }

private:
  CheckReport report_;
};

/// (q, a, b, d) with the nondegeneracy conditions that make both eigenvalue
/// sequences mutually distinct.
class QRacahParams {
public:
  /// Validates; throws std::invalid_argument naming the violated condition.
  QRacahParams(Scalar q, Scalar a, Scalar b, int d);

  [[nodiscard]] const Scalar& q() const { return q_; }
  [[nodiscard]] const Scalar& a() const { return a_; }
  [[nodiscard]] const Scalar& b() const { return b_; }
  [[nodiscard]] int d() const { return d_; }

  /// Parameters of the system with the A-ordering reversed: a -> a^{-1}.
  [[nodiscard]] QRacahParams reversed() const { return {q_, a_.inverse(), b_, d_}; }

  friend bool operator==(const QRacahParams&, const QRacahParams&) = default;

private:
  Scalar q_, a_, b_;
  int d_;
};

struct Spectra {
  std::vector<Scalar> theta;
  std::vector<Scalar> thetastar;
};

/// theta_i = a q^{d-2i} + a^{-1} q^{2i-d}, and the same with b for thetastar.
Spectra eigenvalues(const QRacahParams& params);

/// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j). Throws when the
/// theta are not distinct or prod (A - theta_i I) != 0.
std::vector<Matrix> primitive_idempotents(const Matrix& a, std::span<const Scalar> theta);

/// Same product formula without the minimal-polynomial precondition.
std::vector<Matrix> lagrange_idempotents(const Matrix& a, std::span<const Scalar> theta);

/// sum_{i=from}^{to} E_i V
Subspace eigenspace_sum(std::span<const Matrix> idempotents, int from, int to);

/// Axiom entries "i", "ii", "iii", "iv" for the pair under the orderings
/// induced by the parameters. Irreducibility is PASS when the algebra
/// generated by A, A* is the full matrix algebra, or when every A-invariant
/// subspace can be enumerated and none is A*-invariant; FAIL when a common
/// invariant subspace is found; INCONCLUSIVE otherwise.
CheckReport verify_td_axioms(const Matrix& a, const Matrix& astar, const QRacahParams& params);

/// Lower bidiagonal A (diagonal theta, subdiagonal 1) and upper bidiagonal
/// A* (diagonal thetastar, superdiagonal phi). No preconditions on phi.
std::pair<Matrix, Matrix> split_form_matrices(const QRacahParams& params,
                                              std::span<const Scalar> phi);

struct SplitFormCandidate {
  Matrix a;
  Matrix astar;
  CheckReport axioms;
  [[nodiscard]] bool valid() const;
};

/// Requires d nonzero phi entries (std::invalid_argument otherwise).
SplitFormCandidate construct_split_form(const QRacahParams& params, std::span<const Scalar> phi);

/// A phi sequence for which the split form is a TD pair. Tries the closed-form
/// q-Racah candidate with free parameter c first and falls back to solving
/// the affine system E*_{k-2} A E*_k = 0, k = 2..d, given phi_1. Every result is gated by
/// verify_td_axioms; throws TDSystemError when nothing passes.
std::vector<Scalar> find_phi(const QRacahParams& params, const Scalar& c);

/// The closed-form candidate alone (may contain zeros; not gated).
std::vector<Scalar> candidate_phi(const QRacahParams& params, const Scalar& c);

/// Constraint-solver route alone, starting from the given phi_1 (not gated).
std::vector<Scalar> solve_phi(const QRacahParams& params, const Scalar& phi1);

class TDSystem {
public:
  /// Verifies all four axioms; throws TDSystemError with the report otherwise.
  static TDSystem from_matrices(const Matrix& a, const Matrix& astar, const QRacahParams& params);
  /// Builds the same bookkeeping without verification (for mutation studies).
  static TDSystem unchecked(const Matrix& a, const Matrix& astar, const QRacahParams& params);

  [[nodiscard]] const QRacahParams& params() const { return params_; }
  [[nodiscard]] int d() const { return params_.d(); }
  [[nodiscard]] std::size_t dim() const { return a_.dim(); }
  [[nodiscard]] const Matrix& a() const { return a_; }
  [[nodiscard]] const Matrix& astar() const { return astar_; }
  [[nodiscard]] const std::vector<Scalar>& theta() const { return theta_; }
  [[nodiscard]] const std::vector<Scalar>& thetastar() const { return thetastar_; }
  [[nodiscard]] const std::vector<Matrix>& e() const { return e_; }
  [[nodiscard]] const std::vector<Matrix>& estar() const { return estar_; }
  [[nodiscard]] bool verified() const { return verified_; }

  friend bool operator==(const TDSystem&, const TDSystem&) = default;

private:
  TDSystem(const Matrix& a, const Matrix& astar, const QRacahParams& params, bool verified);

  QRacahParams params_;
  Matrix a_, astar_;
  std::vector<Scalar> theta_, thetastar_;
  std::vector<Matrix> e_, estar_;
  bool verified_ = false;
};

/// The system with the A-idempotents in reverse order. Rebuilds the
/// bookkeeping from (A, A*, a^{-1}) and confirms E^_i = E_{d-i}.
TDSystem downarrow(const TDSystem& tds);

enum class SplitFlavor { First, Second };

struct SplitDecomposition {
  std::vector<Subspace> parts;
  SplitFlavor flavor = SplitFlavor::First;

  /// Columns: the bases of parts 0..d in order.
  [[nodiscard]] Matrix basis_matrix() const;
};

/// U_i = (E*_0V + ... + E*_iV) cap (E_iV + ... + E_dV), or the second flavor
/// with E_0V + ... + E_{d-i}V. No checks.
SplitDecomposition split_parts(const TDSystem& tds, SplitFlavor flavor);

/// Direct sum, the filtration identities and the raising/lowering
/// containments of A and A*.
void check_split_decomposition(const TDSystem& tds, const SplitDecomposition& split, Checker& ck);

/// split_parts + check_split_decomposition; throws TDSystemError on failure.
SplitDecomposition split_decomposition(const TDSystem& tds, SplitFlavor flavor);

/// E_i X E_j = 0 whenever |i - j| > 1.
bool acts_tridiagonally(std::span<const Matrix> idempotents, const Matrix& x);
/// The block E_i X E_j with |i-j|>1 that is nonzero, summed; zero when tridiagonal.
Matrix tridiagonal_violation(std::span<const Matrix> idempotents, const Matrix& x);

/// Confirms the given ordering and its reversal satisfy the tridiagonal
/// conditions (t1)/(t2).
bool confirm_standard_orderings(const TDSystem& tds);

}  // namespace tdq
