#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdq/operators.hpp"
#include "tdq/qtet.hpp"
#include "tdq/report.hpp"
#include "tdq/tdsystem.hpp"

namespace tdq {

using json = nlohmann::ordered_json;

/// Malformed file, bad schema, or a fixture that does not verify.
class FixtureError : public std::runtime_error {
public:
  explicit FixtureError(const std::string& what, CheckReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const CheckReport& report() const { return report_; }

private:
  CheckReport report_;
};

json to_json(const Scalar& s);
json to_json(const Matrix& m);
/// Accepts "p/q" strings and JSON integers.
Scalar scalar_from_json(const json& j);
Matrix matrix_from_json(const json& j);

struct Fixture {
  QRacahParams params;
  std::optional<std::vector<Scalar>> phi;
  Matrix a, astar;
};

json to_json(const Fixture& f);
Fixture fixture_from_json(const json& j);

/// Axiom report plus an "integrity" entry: when phi is present, A and A*
/// must equal the split form it determines.
CheckReport verify_fixture(const Fixture& f);
/// The verified system; throws FixtureError carrying the report otherwise.
TDSystem fixture_system(const Fixture& f);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
Fixture load_fixture(const std::filesystem::path& path);

/// Map from operator name to matrix, plus "t" for the t_i.
json operator_dump(const OperatorSet& ops);
/// Labels to matrices plus "t" and "upsilon".
json module_dump(const BoxqModule& m);

struct ReportMeta {
  std::string fixture;
  std::optional<unsigned long long> seed;
  bool timing = false;
};

json report_json(const CheckReport& r, const ReportMeta& meta);
std::string report_text(const CheckReport& r, const ReportMeta& meta);

}  // namespace tdq
