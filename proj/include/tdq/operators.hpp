#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdq/matrix.hpp"
#include "tdq/report.hpp"
#include "tdq/tdsystem.hpp"

namespace tdq {

class OperatorError : public std::runtime_error {
public:
  explicit OperatorError(const std::string& what, CheckReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const CheckReport& report() const { return report_; }

private:
  CheckReport report_;
};

/// The operators of the system with the A-ordering reversed, in the
/// reversed system's own bookkeeping.
struct DownValues {
  std::vector<Scalar> t;
  Matrix W, K, B, M, N, Q, psi, Lambda;
};

struct OperatorSet {
  std::vector<Scalar> t;
  Matrix W, Winv;
  Matrix K, Kinv, B, Binv;
  Matrix M, Minv, N, Ninv, Q, Qinv;
  Matrix psi, Lambda;
  Matrix R, Rminus, Rplus, Lscript;
  SplitDecomposition split, split_down;
  DownValues down;
};

/// t_i = (-1)^i a^i q^{i(d-i)}
std::vector<Scalar> t_scalars(const QRacahParams& params);

/// sum_i c_i E_i
Matrix spectral_sum(std::span<const Matrix> idempotents, std::span<const Scalar> values);

/// W = sum t_i E_i and its inverse sum t_i^{-1} E_i.
std::pair<Matrix, Matrix> W_spectral(const TDSystem& tds);

/// K (resp. B) acts as q^{d-2i} on the i-th part of the first (resp. second)
/// split decomposition. Throws TDSystemError when a split check fails.
std::pair<Matrix, Matrix> K_B_maps(const TDSystem& tds);

/// X^vee = sum E_i X E_i
Matrix vee(const Matrix& x, const TDSystem& tds);

/// Operators computed from one defining expression each, without any
/// cross-checks. Throws ArithmeticError or TDSystemError when something
/// cannot be formed.
OperatorSet raw_operators(const TDSystem& tds);

/// Every operator plus the report of all postconditions (one entry per
/// operator group). `ops` is empty when the operators could not be formed,
/// in which case the report says why.
struct OperatorBuild {
  std::optional<OperatorSet> ops;
  CheckReport postconditions;
};
OperatorBuild build_operators(const TDSystem& tds);

/// build_operators, throwing OperatorError unless every postcondition holds.
OperatorSet compute_operators(const TDSystem& tds);

// Postcondition groups. Each appends its assertions to `ck`; the identity
// suite re-runs them under its own ids.

void check_t_scalars(const QRacahParams& params, Checker& ck);
void check_W(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_W_down(const TDSystem& tds, const OperatorSet& ops, Checker& ck);

/// The scalar Chu/Vandermonde sums for all 0 <= r <= s <= d. `variant`
/// selects the expansion about theta_s instead of theta_r.
void check_cv_sums(const TDSystem& tds, bool variant, Checker& ck);
/// The polynomial expansions of W^{+-1} on E_rV+...+E_dV (or, for the
/// variant, E_0V+...+E_sV), for every r (s). `full_space_only` restricts to
/// the expansion about theta_0 (theta_d) compared on all of V.
void check_W_expansions(const TDSystem& tds, const OperatorSet& ops, bool variant,
                        bool full_space_only, Checker& ck);
/// The scalar sums and W expansions in one report (entries cv, cvP, cvP-full,
/// cvVar, cvPVar, cvPVar-full).
CheckReport W_polynomial_forms(const TDSystem& tds);

void check_split_actions(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_K_B(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_kA(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_kb(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_W2K(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_WKB_commutators(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_A_from_K(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_Qpre(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_M_N(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_Q(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_Qinv_tridiagonal(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_psi_expressions(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_psi_twist(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_psi_down(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_psi_lowering(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_Minv_Ninv(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_Lambda(const TDSystem& tds, const OperatorSet& ops, Checker& ck);
void check_R(const TDSystem& tds, const OperatorSet& ops, Checker& ck);

enum class LscriptRelation { LK, LB, LU, LUdown, Lpsi };
inline constexpr LscriptRelation kLscriptRelations[] = {LscriptRelation::LK, LscriptRelation::LB,
                                                        LscriptRelation::LU, LscriptRelation::LUdown,
                                                        LscriptRelation::Lpsi};
const char* lscript_id(LscriptRelation r);
const char* lscript_statement(LscriptRelation r);
void check_lscript(const TDSystem& tds, const OperatorSet& ops, LscriptRelation r, Checker& ck);

/// The five relations proposed for L; one report entry each, status PROBE.
std::vector<ReportEntry> lscript_probes(const TDSystem& tds, const OperatorSet& ops);

/// Diagonalizable with eigenvalues among `values`, each occurring.
void check_spectrum(const std::string& label, const Matrix& x, std::span<const Scalar> values,
                    Checker& ck);

/// q^{d-2i}, i = 0..d
std::vector<Scalar> k_eigenvalues(const QRacahParams& params);

}  // namespace tdq
