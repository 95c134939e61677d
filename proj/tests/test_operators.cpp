#include <catch_amalgamated.hpp>

#include "tdq/operators.hpp"

using namespace tdq;

namespace {

TDSystem system_for(int d) {
  const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), d);
  const auto phi = d == 1 ? std::vector<Scalar>{Scalar(1)} : find_phi(p, Scalar(7));
  const auto sf = construct_split_form(p, phi);
  return TDSystem::from_matrices(sf.a, sf.astar, p);
}

}  // namespace

TEST_CASE("t scalars") {
  const QRacahParams p(Scalar(2), Scalar(3), Scalar(5), 1);
  CHECK(t_scalars(p) == std::vector<Scalar>{Scalar(1), Scalar(-3)});
  const QRacahParams p3(Scalar(2), Scalar(3), Scalar(5), 3);
  const auto t = t_scalars(p3);
  CHECK(t[0] == Scalar(1));
  CHECK(t[3] == Scalar(-27));
  CHECK(t[1] == Scalar(-12));  // -a q^{1*2}
}

TEST_CASE("d = 1 operator values") {
  const auto tds = system_for(1);
  const auto ops = compute_operators(tds);
  CHECK(ops.W == Matrix{{1, 0}, {1, -3}});
  CHECK(ops.Winv == Matrix{{1, 0}, {Scalar(1, 3), Scalar(-1, 3)}});
  CHECK(ops.K == Matrix{{2, 0}, {0, Scalar(1, 2)}});
  CHECK(ops.B == Matrix{{2, -6}, {0, Scalar(1, 2)}});
  CHECK(ops.M == Matrix{{2, Scalar(3, 4)}, {0, Scalar(1, 2)}});
  CHECK(ops.N == Matrix{{Scalar(1, 2), Scalar(27, 4)}, {0, 2}});
  CHECK(ops.Q == Matrix{{Scalar(11, 4), Scalar(-9, 4)}, {Scalar(3, 4), Scalar(-1, 4)}});
  CHECK(ops.Q.determinant() == Scalar(1));
  CHECK(ops.Q.trace() == Scalar(5, 2));
  CHECK(ops.psi == Matrix{{0, Scalar(9, 4)}, {0, 0}});
  CHECK(ops.Lambda == Scalar(17, 4) * Matrix::identity(2));
  CHECK((ops.psi * ops.psi).is_zero());
}

TEST_CASE("vee") {
  const auto tds = system_for(2);
  const auto n = tds.dim();
  CHECK(vee(Matrix::identity(n), tds).is_identity());
  CHECK(vee(tds.a(), tds) == tds.a());
  CHECK(vee(commutator(tds.a(), tds.astar()), tds).is_zero());
  CHECK(commutator(tds.a(), vee(tds.astar(), tds)).is_zero());
}

TEST_CASE("all postconditions hold for d = 1, 2, 3") {
  for (int d = 1; d <= 3; ++d) {
    const auto tds = system_for(d);
    const auto build = build_operators(tds);
    REQUIRE(build.ops.has_value());
    for (const auto& e : build.postconditions.entries) {
      INFO("d=" << d << " " << e.id << ": " << e.detail);
      CHECK(e.status == Status::Pass);
    }
    const auto forms = W_polynomial_forms(tds);
    for (const auto& e : forms.entries) {
      INFO("d=" << d << " " << e.id << ": " << e.detail);
      CHECK(e.status == Status::Pass);
    }
  }
}

TEST_CASE("a perturbed A* breaks a postcondition") {
  const auto tds = system_for(2);
  Matrix astar = tds.astar();
  astar(2, 0) += Scalar(1);
  const auto broken = TDSystem::unchecked(tds.a(), astar, tds.params());
  const auto build = build_operators(broken);
  CHECK_FALSE(build.postconditions.ok());
  CHECK_THROWS_AS(compute_operators(broken), OperatorError);
}
