#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "tdq/explore.hpp"
#include "tdq/io.hpp"
#include "tdq/suite.hpp"

using namespace tdq;

namespace {

std::filesystem::path fixtures_dir() {
  const char* env = std::getenv("TDQ_FIXTURES");
  return env ? std::filesystem::path(env) : std::filesystem::path("fixtures");
}

Fixture d1_fixture() {
  const QRacahParams p(2, 3, 5, 1);
  const std::vector<Scalar> phi{1};
  const auto [a, astar] = split_form_matrices(p, phi);
  return Fixture{p, phi, a, astar};
}

}  // namespace

TEST_CASE("scalar and matrix json") {
  CHECK(to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(to_json(Scalar(5)) == "5");
  CHECK(scalar_from_json(json("10/4")) == Scalar(5, 2));
  CHECK(scalar_from_json(json(7)) == Scalar(7));
  CHECK_THROWS_AS(scalar_from_json(json(1.5)), FixtureError);
  CHECK_THROWS_AS(scalar_from_json(json("1/0")), FixtureError);
  const Matrix m{{1, Scalar(2, 3)}, {0, -1}};
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1","2"],["3"]])")), FixtureError);
}

TEST_CASE("fixture round trip") {
  const Fixture f = d1_fixture();
  const json j = to_json(f);
  CHECK(j["A"] == json::parse(R"([["37/6","0"],["1","13/6"]])"));
  CHECK(j["Astar"] == json::parse(R"([["101/10","1"],["0","29/10"]])"));
  const Fixture g = fixture_from_json(j);
  CHECK(g.params == f.params);
  CHECK(g.a == f.a);
  CHECK(g.astar == f.astar);
  CHECK(to_json(g).dump() == j.dump());
  CHECK(verify_fixture(g).ok());
}

TEST_CASE("malformed fixtures are rejected") {
  json j = to_json(d1_fixture());
  json missing = j;
  missing.erase("Astar");
  CHECK_THROWS_AS(fixture_from_json(missing), FixtureError);
  json bad_q = j;
  bad_q["q"] = "1";
  CHECK_THROWS_AS(fixture_from_json(bad_q), FixtureError);
  json bad_d = j;
  bad_d["d"] = "one";
  CHECK_THROWS_AS(fixture_from_json(bad_d), FixtureError);
}

TEST_CASE("integrity and axiom failures") {
  Fixture f = d1_fixture();
  f.phi = std::vector<Scalar>{2};
  const auto r = verify_fixture(f);
  REQUIRE(r.find("integrity") != nullptr);
  CHECK(r.find("integrity")->status == Status::Fail);
  CHECK_THROWS_AS(fixture_system(f), FixtureError);

  Fixture g = d1_fixture();
  g.phi.reset();
  g.astar(0, 1) = 0;
  const auto rg = verify_fixture(g);
  REQUIRE(rg.find("iv") != nullptr);
  CHECK(rg.find("iv")->status == Status::Fail);
  CHECK(rg.find("iv")->witness.has_value());
}

TEST_CASE("operator dumps match the independent oracle") {
  for (const char* name : {"d1", "d2", "d3"}) {
    const auto dir = fixtures_dir();
    const auto tds = fixture_system(load_fixture(dir / (std::string(name) + ".json")));
    const json expected = read_json(dir / (std::string(name) + "_operators.json"));
    const json got = operator_dump(compute_operators(tds));
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      INFO(name << " " << it.key());
      CHECK(got.at(it.key()) == it.value());
    }
  }
}

TEST_CASE("stored fixtures verify") {
  for (const char* name : {"d1", "d2", "d3", "rand1", "rand2", "rand3"}) {
    INFO(name);
    const auto f = load_fixture(fixtures_dir() / (std::string(name) + ".json"));
    const auto r = verify_fixture(f);
    CHECK(r.ok());
    CHECK(r.count(Status::Inconclusive) == 0);
  }
}

TEST_CASE("module dump upsilon equals the Lambda dump") {
  const auto tds = fixture_system(load_fixture(fixtures_dir() / "d2.json"));
  const auto ops = compute_operators(tds);
  const json lambda = operator_dump(ops)["Lambda"];
  for (const auto& m : {module_one(tds, ops), module_two(tds, ops)}) {
    const json j = module_dump(m);
    CHECK(j["upsilon"] == lambda);
    CHECK(j.size() == 10);
  }
}

TEST_CASE("reports are deterministic") {
  const auto tds = fixture_system(load_fixture(fixtures_dir() / "d2.json"));
  SuiteOptions so;
  so.seed = 99;
  const ReportMeta meta{"d2.json", so.seed, false};
  const std::string first = report_json(run_suite(tds, so), meta).dump(2);
  const std::string second = report_json(run_suite(tds, so), meta).dump(2);
  CHECK(first == second);
  CHECK(first.find("elapsed") == std::string::npos);
  const json j = json::parse(first);
  CHECK(j["seed"] == 99);
  CHECK(j["entries"].size() > 35);
  CHECK(report_text(run_suite(tds, so), meta) == report_text(run_suite(tds, so), meta));
  const ReportMeta timed{"d2.json", so.seed, true};
  CHECK(report_json(run_suite(tds, so), timed).contains("elapsed"));
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(Matrix::identity(3)) == std::vector<Scalar>{-1, 1});
  CHECK(minimal_polynomial(Matrix{{2, 0}, {0, Scalar(1, 2)}}) == std::vector<Scalar>{1, Scalar(-5, 2), 1});
  CHECK(minimal_polynomial(Matrix{{0, 1}, {0, 0}}) == std::vector<Scalar>{0, 0, 1});
  const Matrix j{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}};
  CHECK(minimal_polynomial(j) == std::vector<Scalar>{4, -4, 1});
}

TEST_CASE("explore emits only probes") {
  const auto tds = fixture_system(load_fixture(fixtures_dir() / "d2.json"));
  const auto x = explore(tds, compute_operators(tds));
  CHECK(x.report.ok());
  CHECK(x.report.count(Status::Probe) == x.report.entries.size());
  REQUIRE(x.report.find("19.3") != nullptr);
  CHECK(x.report.find("19.3")->probe_outcome == Status::Inconclusive);
  std::size_t lscript = 0;
  for (const auto& e : x.report.entries)
    if (e.id.rfind("19.2:", 0) == 0) ++lscript;
  CHECK(lscript == 5);
  CHECK(x.data["19.3"]["minimal_polynomials"]["K"].size() == 4);
}
