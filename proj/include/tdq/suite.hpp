#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdq/operators.hpp"
#include "tdq/report.hpp"
#include "tdq/tdsystem.hpp"

namespace tdq {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Actor {
  std::string name;
  Matrix x;
};

/// Seeded X = sum_{|i-j|<=1} E_i Y E_j, Y with entries in [-3, 3], followed by
/// the canonical actors A, A*, psi, M^{-1}, N^{-1}, Q^{-1}, I.
std::vector<Actor> tridiagonal_actors(const TDSystem& tds, const OperatorSet& ops, std::uint64_t seed);
/// The random Y itself, not projected.
Matrix random_matrix(std::size_t n, std::uint64_t seed);
/// E_i e_{rc} E_j over |i-j| <= 1 and every matrix unit, zero blocks dropped.
std::vector<Actor> exhaustive_actors(const TDSystem& tds);

struct SuiteContext {
  const TDSystem& tds;
  const OperatorSet* ops;        ///< null when the operators could not be formed
  std::vector<Actor> actors;     ///< tridiagonal
  std::vector<Actor> arbitrary;  ///< no structure assumed
};

struct IdentityCheck {
  std::string id;
  std::string anchor;
  bool probe = false;
  bool needs_ops = true;
  std::function<void(const SuiteContext&, Checker&)> evaluator;
};

const std::vector<IdentityCheck>& catalog();

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int seeds = 3;  ///< actor seeds seed, seed+1, ...
  std::optional<std::string> filter;
  bool exhaustive = false;
};

/// fnmatch-style glob on the id; an empty filter matches everything.
bool id_matches(const std::string& id, const std::optional<std::string>& filter);

/// Every catalog entry in catalog order. `ops` may be null, in which case
/// entries that need operators fail with an error.
CheckReport run_catalog(const TDSystem& tds, const OperatorSet* ops, const SuiteOptions& options);

/// Operators built leniently, their postconditions (ids "post:<group>"),
/// then the catalog. Timed.
CheckReport run_suite(const TDSystem& tds, const SuiteOptions& options);

}  // namespace tdq
