#pragma once

#include <string>
#include <vector>

#include "tdq/io.hpp"
#include "tdq/operators.hpp"
#include "tdq/report.hpp"
#include "tdq/tdsystem.hpp"

namespace tdq {

/// Smallest monic relation among I, X, X^2, ...; coefficients c_0..c_k with c_k = 1.
std::vector<Scalar> minimal_polynomial(const Matrix& x);

struct ExploreResult {
  CheckReport report;  ///< PROBE entries only
  json data;           ///< raw matrices and measurements per problem
  std::vector<std::string> notes;
};

/// Probes for the open problems: R^+/R^- data, the five claimed relations
/// for the L operator, minimal polynomials of words in K and Q, and whether
/// A*, WA*W^{-1} satisfies the TD axioms under some ordering.
ExploreResult explore(const TDSystem& tds, const OperatorSet& ops);

}  // namespace tdq
