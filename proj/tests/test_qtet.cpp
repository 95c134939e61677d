#include <catch_amalgamated.hpp>

#include "tdq/qtet.hpp"

using namespace tdq;

namespace {

TDSystem system_for(int d) {
  const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), d);
  const auto phi = d == 1 ? std::vector<Scalar>{Scalar(1)} : find_phi(p, Scalar(7));
  const auto sf = construct_split_form(p, phi);
  return TDSystem::from_matrices(sf.a, sf.astar, p);
}

bool all_pass(const CheckReport& r) {
  for (const auto& e : r.entries) {
    INFO(e.id << ": " << e.detail);
    if (e.status != Status::Pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity triple is equitable") {
  const Scalar q(2);
  const auto I = Matrix::identity(3);
  CHECK(check_equitable_triple(I, I, I, q));
  const auto uq = check_uqsl2(I, I, I, I, q);
  CHECK(all_pass(uq.report));
  CHECK(uq.casimir == (q + q.inverse()) * I);
}

TEST_CASE("scaled triple breaks the defining relations") {
  const Scalar q(2);
  const auto I = Matrix::identity(2);
  const auto x = Scalar(2) * I;
  CHECK_FALSE(check_equitable_triple(x, I, I, q));
  const auto uq = check_uqsl2(x, I, I, I, q);
  const auto* rel = uq.report.find("relations");
  REQUIRE(rel != nullptr);
  CHECK(rel->status == Status::Fail);
  CHECK(rel->witness.has_value());
}

TEST_CASE("both modules satisfy everything for d = 1, 2, 3") {
  for (int d = 1; d <= 3; ++d) {
    const auto tds = system_for(d);
    const auto ops = compute_operators(tds);
    CHECK(module_one(tds, ops).t == Scalar(3));
    CHECK(module_two(tds, ops).t == Scalar(1, 3));
    for (Which w : {Which::One, Which::Two}) {
      const auto r = module_report(tds, ops, w);
      for (const auto& e : r.entries) {
        INFO("d=" << d << " module " << (w == Which::One ? 1 : 2) << " " << e.id << ": " << e.detail);
        CHECK(e.status == Status::Pass);
      }
      CHECK(r.entries.size() >= 18);
    }
  }
}

TEST_CASE("relation catalogue has 18 instances") {
  const auto tds = system_for(2);
  const auto ops = compute_operators(tds);
  const auto m = module_one(tds, ops);
  const auto r = check_boxq(m.gens, tds.params().q());
  CHECK(r.entries.size() == 18);
  CHECK(all_pass(r));
}

TEST_CASE("perturbed generator fails segregation") {
  const auto tds = system_for(2);
  const auto ops = compute_operators(tds);
  auto g = module_one(tds, ops).gens;
  g["23"] = g["23"] + Matrix::identity(g["23"].dim());
  const auto seg = check_segregated(g, tds.params().a(), tds.params().q());
  CHECK_FALSE(seg.report.ok());
  CHECK(seg.report.find("seg:0123a")->status == Status::Fail);
}

TEST_CASE("missing label throws") {
  const auto tds = system_for(1);
  const auto ops = compute_operators(tds);
  auto g = module_one(tds, ops).gens;
  g.erase("13");
  CHECK_THROWS_AS(check_boxq(g, Scalar(2)), QtetError);
  CHECK_THROWS_AS(make_module(g, Scalar(3), Scalar(2)), QtetError);
}

TEST_CASE("assembly rejects a w violating the two conditions") {
  const auto tds = system_for(2);
  const auto ops = compute_operators(tds);
  const auto m = module_one(tds, ops);
  const Scalar q = tds.params().q();
  const auto bad = Scalar(2) * m.x(3, 1);
  CHECK_THROWS_AS(assemble_from_assumption(m.x(1, 2), m.x(2, 0), m.x(0, 2), m.x(0, 1), bad, m.t, q),
                  QtetError);
  const auto good = assemble_from_assumption(m.x(1, 2), m.x(2, 0), m.x(0, 2), m.x(0, 1), m.x(3, 1), m.t, q);
  CHECK(good.gens == m.gens);
  CHECK(good.upsilon == ops.Lambda);
}

TEST_CASE("shift four times is the identity") {
  const auto tds = system_for(1);
  const auto ops = compute_operators(tds);
  const auto g = module_two(tds, ops).gens;
  CHECK(shifted(shifted(shifted(shifted(g)))) == g);
  CHECK(shifted(g).at("12") == g.at("01"));
}
