#include "tdq/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace tdq {

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw FixtureError("bad scalar \"" + j.get<std::string>() + "\": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw FixtureError("scalar must be a \"p/q\" string or an integer, got " + j.dump());
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FixtureError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw FixtureError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Fixture& f) {
  json j;
  j["q"] = to_json(f.params.q());
  j["a"] = to_json(f.params.a());
  j["b"] = to_json(f.params.b());
  j["d"] = f.params.d();
  if (f.phi) {
    json p = json::array();
    for (const auto& s : *f.phi) p.push_back(to_json(s));
    j["phi"] = std::move(p);
  }
  j["A"] = to_json(f.a);
  j["Astar"] = to_json(f.astar);
  return j;
}

Fixture fixture_from_json(const json& j) {
  if (!j.is_object()) throw FixtureError("fixture must be a JSON object");
  for (const char* key : {"q", "a", "b", "d", "A", "Astar"})
    if (!j.contains(key)) throw FixtureError(std::string("fixture is missing \"") + key + "\"");
  if (!j["d"].is_number_integer()) throw FixtureError("\"d\" must be an integer");
  const auto d = j["d"].get<long long>();
  if (d < 1 || d > 64) throw FixtureError("\"d\" out of range");
  std::optional<QRacahParams> params;
  try {
    params.emplace(scalar_from_json(j["q"]), scalar_from_json(j["a"]), scalar_from_json(j["b"]),
                   static_cast<int>(d));
  } catch (const std::invalid_argument& e) {
    throw FixtureError(std::string("invalid parameters: ") + e.what());
  }
  Fixture f{*params, std::nullopt, matrix_from_json(j["A"]), matrix_from_json(j["Astar"])};
  if (j.contains("phi")) {
    if (!j["phi"].is_array()) throw FixtureError("\"phi\" must be an array");
    std::vector<Scalar> phi;
    for (const auto& p : j["phi"]) phi.push_back(scalar_from_json(p));
    f.phi = std::move(phi);
  }
  const auto n = static_cast<std::size_t>(d + 1);
  if (f.a.dim() != f.astar.dim()) throw FixtureError("A and Astar differ in dimension");
  if (f.a.dim() < n) throw FixtureError("matrices are smaller than d + 1");
  return f;
}

CheckReport verify_fixture(const Fixture& f) {
  CheckReport r = verify_td_axioms(f.a, f.astar, f.params);
  if (f.phi) {
    Checker ck;
    if (f.phi->size() != static_cast<std::size_t>(f.params.d())) {
      ck.error("phi length", "phi must have d entries");
    } else {
      const auto [a, astar] = split_form_matrices(f.params, *f.phi);
      if (a.dim() != f.a.dim()) {
        ck.error("dimension", "split form has dimension d + 1");
      } else {
        ck.equal("A = split form", f.a, a);
        ck.equal("Astar = split form", f.astar, astar);
      }
    }
    r.entries.push_back(ck.finish("integrity", "stored matrices match the stored phi"));
  }
  return r;
}

TDSystem fixture_system(const Fixture& f) {
  const auto r = verify_fixture(f);
  for (const auto& e : r.entries)
    if (e.status != Status::Pass)
      throw FixtureError("fixture check (" + e.id + ") " + to_string(e.status) +
                             (e.detail.empty() ? "" : ": " + e.detail),
                         r);
  return TDSystem::from_matrices(f.a, f.astar, f.params);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FixtureError("cannot write " + path.string());
  out << text;
  if (!out) throw FixtureError("write failed: " + path.string());
}

Fixture load_fixture(const std::filesystem::path& path) { return fixture_from_json(read_json(path)); }

json operator_dump(const OperatorSet& ops) {
  json j;
  json t = json::array();
  for (const auto& s : ops.t) t.push_back(to_json(s));
  j["t"] = std::move(t);
  const std::pair<const char*, const Matrix*> named[] = {
      {"W", &ops.W},   {"Winv", &ops.Winv},     {"K", &ops.K},           {"B", &ops.B},
      {"M", &ops.M},   {"N", &ops.N},           {"Q", &ops.Q},           {"psi", &ops.psi},
      {"Lambda", &ops.Lambda}, {"R", &ops.R},   {"Rminus", &ops.Rminus}, {"Rplus", &ops.Rplus},
      {"Lscript", &ops.Lscript},
  };
  for (const auto& [name, m] : named) j[name] = to_json(*m);
  return j;
}

json module_dump(const BoxqModule& m) {
  json j;
  for (const char* l : kBoxqLabels) j[l] = to_json(m.gens.at(l));
  j["t"] = to_json(m.t);
  j["upsilon"] = to_json(m.upsilon);
  return j;
}

json report_json(const CheckReport& r, const ReportMeta& meta) {
  json j;
  j["fixture"] = meta.fixture;
  if (meta.seed) j["seed"] = *meta.seed;
  else j["seed"] = nullptr;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json x;
    x["id"] = e.id;
    x["anchor"] = e.anchor;
    x["status"] = to_string(e.status);
    if (e.probe_outcome) x["probe_outcome"] = to_string(*e.probe_outcome);
    x["assertions"] = e.assertions;
    if (!e.detail.empty()) x["detail"] = e.detail;
    if (e.witness) x["witness"] = to_json(*e.witness);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"inconclusive", r.count(Status::Inconclusive)},
                  {"probe", r.count(Status::Probe)}};
  if (meta.timing) j["elapsed"] = r.elapsed_seconds;
  return j;
}

std::string report_text(const CheckReport& r, const ReportMeta& meta) {
  std::ostringstream os;
  os << "fixture: " << meta.fixture << "\n";
  if (meta.seed) os << "seed: " << *meta.seed << "\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(13) << to_string(e.status) << ' ' << std::setw(24) << e.id;
    if (e.probe_outcome) os << " [" << to_string(*e.probe_outcome) << "]";
    os << ' ' << e.anchor;
    if (!e.detail.empty() && (e.status != Status::Pass)) os << "\n    " << e.detail;
    if (e.witness && e.status == Status::Fail) os << "\n    witness " << to_json(*e.witness).dump();
    os << "\n";
  }
  os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Inconclusive) << " inconclusive, " << r.count(Status::Probe) << " probe\n";
  if (meta.timing) os << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace tdq
