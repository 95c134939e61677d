#include <catch_amalgamated.hpp>

#include <set>

#include "tdq/suite.hpp"

using namespace tdq;

namespace {

TDSystem system_for(int d, Scalar q = 2, Scalar a = 3, Scalar b = 5) {
  const QRacahParams p(q, a, b, d);
  const auto phi = d == 1 ? std::vector<Scalar>{Scalar(1)} : find_phi(p, Scalar(7));
  const auto sf = construct_split_form(p, phi);
  return TDSystem::from_matrices(sf.a, sf.astar, p);
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& c = catalog();
  CHECK(c.size() >= 35);
  std::set<std::string> ids;
  std::size_t probes = 0;
  for (const auto& e : c) {
    ids.insert(e.id);
    if (e.probe) ++probes;
    CHECK_FALSE(e.anchor.empty());
  }
  CHECK(ids.size() == c.size());
  CHECK(probes == 5);
  CHECK(ids.count("C1") == 1);
  CHECK(ids.count("C41e") == 1);
}

TEST_CASE("actors act tridiagonally") {
  const auto tds = system_for(3);
  const auto ops = compute_operators(tds);
  const auto acts = tridiagonal_actors(tds, ops, kDefaultSeed);
  bool has_identity = false, has_astar = false;
  for (const auto& a : acts) {
    INFO(a.name);
    CHECK(acts_tridiagonally(tds.e(), a.x));
    has_identity |= a.x.is_identity();
    has_astar |= a.x == tds.astar();
  }
  CHECK(has_identity);
  CHECK(has_astar);
  CHECK_FALSE(acts.front().x.is_zero());
  for (const auto& a : exhaustive_actors(tds)) CHECK(acts_tridiagonally(tds.e(), a.x));
  CHECK(tridiagonal_actors(tds, ops, 5).front().x == tridiagonal_actors(tds, ops, 5).front().x);
  CHECK_FALSE(tridiagonal_actors(tds, ops, 5).front().x == tridiagonal_actors(tds, ops, 6).front().x);
}

TEST_CASE("suite passes on d = 1, 2, 3") {
  for (int d = 1; d <= 3; ++d) {
    const auto tds = system_for(d);
    const auto r = run_suite(tds, {});
    std::set<std::string> seen;
    for (const auto& e : r.entries) {
      INFO("d=" << d << " " << e.id << ": " << e.detail);
      CHECK(seen.insert(e.id).second);
      if (e.status == Status::Probe) {
        CHECK(e.probe_outcome.has_value());
      } else {
        CHECK(e.status == Status::Pass);
        CHECK(e.assertions > 0);
      }
    }
    CHECK(r.count(Status::Probe) == 5);
  }
}

TEST_CASE("exhaustive actors pass at d = 2") {
  const auto tds = system_for(2);
  SuiteOptions o;
  o.exhaustive = true;
  o.filter = "C1[0-2]";
  const auto r = run_suite(tds, o);
  CHECK(r.entries.size() == 3);
  CHECK(r.ok());
}

TEST_CASE("filter selects ids") {
  const auto tds = system_for(1);
  SuiteOptions o;
  o.filter = "C39";
  const auto r = run_suite(tds, o);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries.front().id == "C39");
  CHECK(id_matches("C41a", std::string("C41*")));
  CHECK_FALSE(id_matches("C4", std::string("C41*")));
  CHECK(id_matches("anything", std::nullopt));
}

TEST_CASE("mutated A* produces a failure with a witness") {
  const auto tds = system_for(2);
  for (std::size_t r = 0; r < tds.dim(); ++r)
    for (std::size_t c = 0; c < tds.dim(); ++c) {
      Matrix astar = tds.astar();
      astar(r, c) += Scalar(1);
      const auto bad = TDSystem::unchecked(tds.a(), astar, tds.params());
      const auto rep = run_suite(bad, {});
      bool witnessed = false;
      for (const auto& e : rep.entries)
        if (e.status == Status::Fail && e.witness && !e.witness->is_zero()) witnessed = true;
      INFO("entry " << r << "," << c);
      CHECK(witnessed);
    }
}

TEST_CASE("same seed gives the same report") {
  const auto tds = system_for(2);
  const auto r1 = run_catalog(tds, nullptr, {});
  const auto ops = compute_operators(tds);
  const auto a = run_catalog(tds, &ops, {});
  const auto b = run_catalog(tds, &ops, {});
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].assertions == b.entries[i].assertions);
  CHECK(r1.find("C4")->status == Status::Fail);
  CHECK(r1.find("C1")->status == Status::Pass);
}

TEST_CASE("random parameter draws pass") {
  const auto tds = system_for(1, Scalar(3), Scalar(-2), Scalar(7, 2));
  const auto r = run_suite(tds, {});
  for (const auto& e : r.entries) {
    INFO(e.id << ": " << e.detail);
    CHECK(e.status != Status::Fail);
  }
}
