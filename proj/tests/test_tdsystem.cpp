#include <catch_amalgamated.hpp>

#include "tdq/tdsystem.hpp"

using namespace tdq;

namespace {

const QRacahParams base(Scalar(2), Scalar(3), Scalar(5), 1);

TDSystem small_system() {
  const std::vector<Scalar> phi{Scalar(1)};
  auto [a, astar] = split_form_matrices(base, phi);
  return TDSystem::from_matrices(a, astar, base);
}

bool all_pass(const CheckReport& r) { return r.count(Status::Pass) == r.entries.size(); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(QRacahParams(Scalar(0), Scalar(3), Scalar(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(QRacahParams(Scalar(2), Scalar(0), Scalar(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(QRacahParams(Scalar(-1), Scalar(3), Scalar(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(QRacahParams(Scalar(2), Scalar(3), Scalar(5), 0), std::invalid_argument);
  // a^2 = q^0 makes theta_0 = theta_1 at d = 1.
  CHECK_THROWS_AS(QRacahParams(Scalar(2), Scalar(1), Scalar(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(QRacahParams(Scalar(2), Scalar(3), Scalar(-1), 1), std::invalid_argument);
  // a^2 = q^2 at d = 2.
  CHECK_THROWS_AS(QRacahParams(Scalar(2), Scalar(2), Scalar(5), 2), std::invalid_argument);
  CHECK_NOTHROW(QRacahParams(Scalar(2), Scalar(2), Scalar(5), 1));
}

TEST_CASE("d = 1 eigenvalues and idempotents") {
  const auto t = small_system();
  CHECK(t.theta() == std::vector<Scalar>{Scalar(37, 6), Scalar(13, 6)});
  CHECK(t.thetastar() == std::vector<Scalar>{Scalar(101, 10), Scalar(29, 10)});
  CHECK(t.a() == Matrix{{Scalar(37, 6), 0}, {1, Scalar(13, 6)}});
  CHECK(t.astar() == Matrix{{Scalar(101, 10), 1}, {0, Scalar(29, 10)}});
  CHECK(t.e()[0] == Matrix{{1, 0}, {Scalar(1, 4), 0}});
  CHECK(t.e()[1] == Matrix{{0, 0}, {Scalar(-1, 4), 1}});
  CHECK((t.e()[0] + t.e()[1]).is_identity());
  CHECK((t.e()[0] * t.e()[1]).is_zero());
  CHECK(t.a() == t.theta()[0] * t.e()[0] + t.theta()[1] * t.e()[1]);
  CHECK(confirm_standard_orderings(t));
}

TEST_CASE("d = 1 split decompositions") {
  const auto t = small_system();
  const auto s = split_decomposition(t, SplitFlavor::First);
  const std::vector<Vector> u0{{Scalar(1), Scalar(0)}};
  const std::vector<Vector> u1{{Scalar(0), Scalar(1)}};
  CHECK(s.parts[0] == Subspace::span(2, u0));
  CHECK(s.parts[1] == Subspace::span(2, u1));
  const auto down = split_decomposition(t, SplitFlavor::Second);
  const std::vector<Vector> w1{{Scalar(4), Scalar(1)}};
  CHECK(down.parts[0] == Subspace::span(2, u0));
  CHECK(down.parts[1] == Subspace::span(2, w1));
}

TEST_CASE("axiom failures are reported per axiom") {
  const auto id = Matrix::identity(2);
  const auto r = verify_td_axioms(id, id, base);
  CHECK(r.find("i")->status == Status::Fail);

  const std::vector<Scalar> zero_phi{Scalar(0)};
  CHECK_THROWS_AS(construct_split_form(base, zero_phi), std::invalid_argument);
  auto [a, astar] = split_form_matrices(base, zero_phi);
  const auto reducible = verify_td_axioms(a, astar, base);
  CHECK(reducible.find("i")->status == Status::Pass);
  CHECK(reducible.find("ii")->status == Status::Pass);
  CHECK(reducible.find("iii")->status == Status::Pass);
  CHECK(reducible.find("iv")->status == Status::Fail);
  CHECK(reducible.find("iv")->witness.has_value());
  CHECK_THROWS_AS(TDSystem::from_matrices(a, astar, base), TDSystemError);
}

TEST_CASE("every nonzero phi at d = 1 gives a TD pair") {
  for (int k : {-3, -1, 1, 2, 7}) {
    const std::vector<Scalar> phi{Scalar(k, 3)};
    CHECK(construct_split_form(base, phi).valid());
  }
}

TEST_CASE("find_phi produces TD pairs for larger diameters") {
  for (int d = 2; d <= 4; ++d) {
    const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), d);
    const auto phi = find_phi(p, Scalar(7));
    REQUIRE(phi.size() == static_cast<std::size_t>(d));
    const auto sf = construct_split_form(p, phi);
    CHECK(all_pass(sf.axioms));
    const auto t = TDSystem::from_matrices(sf.a, sf.astar, p);
    CHECK_NOTHROW(split_decomposition(t, SplitFlavor::First));
    CHECK_NOTHROW(split_decomposition(t, SplitFlavor::Second));
  }
}

TEST_CASE("closed form and constraint solver agree") {
  for (int d = 2; d <= 4; ++d) {
    const QRacahParams p(Scalar(3), Scalar(2, 5), Scalar(7), d);
    const auto cand = candidate_phi(p, Scalar(-2));
    CHECK(solve_phi(p, cand[0]) == cand);
  }
}

TEST_CASE("non-q-Racah phi fails a tridiagonal axiom") {
  const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), 2);
  const std::vector<Scalar> phi{Scalar(1), Scalar(1)};
  const auto sf = construct_split_form(p, phi);
  CHECK_FALSE(sf.valid());
  CHECK(sf.axioms.find("iii")->status == Status::Fail);
}

TEST_CASE("downarrow reverses the A-ordering") {
  const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), 3);
  const auto sf = construct_split_form(p, find_phi(p, Scalar(7)));
  const auto t = TDSystem::from_matrices(sf.a, sf.astar, p);
  const auto down = downarrow(t);
  CHECK(down.params().a() == Scalar(1, 3));
  for (int i = 0; i <= 3; ++i) CHECK(down.e()[static_cast<std::size_t>(i)] == t.e()[static_cast<std::size_t>(3 - i)]);
  CHECK(downarrow(down) == t);
  // U^down of t is U of the reversed system.
  CHECK(split_parts(t, SplitFlavor::Second).parts == split_parts(down, SplitFlavor::First).parts);
}
