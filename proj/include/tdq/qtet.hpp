#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "tdq/matrix.hpp"
#include "tdq/operators.hpp"
#include "tdq/report.hpp"
#include "tdq/tdsystem.hpp"

namespace tdq {

class QtetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The eight standard generator labels, in table order.
inline constexpr std::array<const char*, 8> kBoxqLabels = {"01", "12", "23", "30",
                                                          "02", "13", "20", "31"};

using Generators = std::map<std::string, Matrix>;

/// The four expressions for Upsilon: t(x01 x23 - 1) + q x30 + q^{-1} x12 and
/// its images under the index shift, alternating t and t^{-1}.
std::array<Matrix, 4> upsilon_expressions(const Generators& gens, const Scalar& t, const Scalar& q);

struct BoxqModule {
  Scalar t;
  Generators gens;
  Matrix upsilon;  ///< the first expression
  std::array<Matrix, 4> upsilon_forms;

  [[nodiscard]] const Matrix& x(int i, int j) const;
};

/// Builds the module record; requires all eight labels (QtetError otherwise)
/// and computes all four Upsilon expressions.
BoxqModule make_module(Generators gens, const Scalar& t, const Scalar& q);

struct UqResult {
  CheckReport report;
  Matrix casimir;  ///< q x + q^{-1} y + q z - q xyz
};

/// Equitable presentation of U_q(sl2): inverse, the three defining
/// relations, the six Casimir expressions, the nu-elements and their laws.
UqResult check_uqsl2(const Matrix& x, const Matrix& y, const Matrix& yinv, const Matrix& z,
                     const Scalar& q);

/// Invertibility and the three cyclic q-Weyl relations, into `ck`.
void equitable_triple_checks(const std::string& label, const Matrix& x, const Matrix& y,
                             const Matrix& z, const Scalar& q, Checker& ck);
bool check_equitable_triple(const Matrix& x, const Matrix& y, const Matrix& z, const Scalar& q);

/// All 18 relation instances, one report entry each. Throws QtetError on a
/// missing label or mismatched dimensions.
CheckReport check_boxq(const Generators& gens, const Scalar& q);

struct SegregatedResult {
  CheckReport report;
  Matrix upsilon;
};

/// The ten t-segregated equations, the Upsilon coincidences, the four
/// alternative forms, the Askey-Wilson relations and centrality of Upsilon.
SegregatedResult check_segregated(const Generators& gens, const Scalar& t, const Scalar& q);

/// gens[(i+1, j+1)] = old gens[(i, j)]
Generators shifted(const Generators& gens);

/// The U_q(sl2) triple of kappa_i: (x_{i+2,i+3}, x_{i+3,i+1}, x_{i+1,i+3}, x_{i+1,i+2}).
struct KappaTriple {
  Matrix x, y, yinv, z;
};
KappaTriple kappa(const Generators& gens, int i);

/// The two-sided conditions on w and the product and nu laws that follow.
CheckReport assumption_report(const Matrix& x, const Matrix& y, const Matrix& yinv,
                              const Matrix& z, const Matrix& w, const Scalar& t, const Scalar& q);

/// Module with x01 = z, x12 = x, x23 = y + t^{-1} nu_z, x30 = y + t nu_x,
/// x02 = y^{-1}, x13 = w^{-1}, x20 = y, x31 = w. Throws QtetError when the
/// U_q(sl2) relations fail, w is singular, or the two conditions fail.
BoxqModule assemble_from_assumption(const Matrix& x, const Matrix& y, const Matrix& yinv,
                                    const Matrix& z, const Matrix& w, const Scalar& t,
                                    const Scalar& q);

/// The a-segregated module built from W, K, Q, psi.
BoxqModule module_one(const TDSystem& tds, const OperatorSet& ops);
/// The a^{-1}-segregated module built from W, B, Q, psi.
BoxqModule module_two(const TDSystem& tds, const OperatorSet& ops);

enum class Which { One, Two };

/// Everything claimed about module_one or module_two: all relation
/// instances, segregation, Upsilon = Lambda, the table cross-checks, the
/// kappa triples, the shift symmetry and re-assembly from the U_q(sl2) data.
CheckReport module_report(const TDSystem& tds, const OperatorSet& ops, Which which);

}  // namespace tdq
