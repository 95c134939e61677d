#include <catch_amalgamated.hpp>

#include <random>

#include "tdq/matrix.hpp"

using tdq::Matrix;
using tdq::Scalar;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
  return m;
}

}  // namespace

TEST_CASE("basic products") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(a.determinant() == Scalar(-2));
  CHECK(a.inverse() == Matrix{{-2, 1}, {Scalar(3, 2), Scalar(-1, 2)}});
  CHECK(a.trace() == Scalar(5));
  CHECK(tdq::commutator(a, a).is_zero());
  CHECK(tdq::qcommutator(a, b, Scalar(1)) == tdq::commutator(a, b));
  CHECK(tdq::power(a, -1) == a.inverse());
  CHECK(tdq::power(a, 0).is_identity());
}

TEST_CASE("singular inverse and dimension mismatch throw") {
  const Matrix s{{1, 2}, {2, 4}};
  CHECK_FALSE(s.invertible());
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), tdq::ArithmeticError);
  CHECK_THROWS_AS(Matrix(2) + Matrix(3), tdq::DimensionError);
  CHECK_THROWS_AS(Matrix(2) * Matrix(3), tdq::DimensionError);
}

TEST_CASE("ring properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix x = random_matrix(rng, n), y = random_matrix(rng, n), z = random_matrix(rng, n);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).determinant() == x.determinant() * y.determinant());
    CHECK((x * y).transpose() == y.transpose() * x.transpose());
    if (x.invertible()) {
      CHECK((x * x.inverse()).is_identity());
      CHECK((x.inverse() * x).is_identity());
      CHECK(x.rank() == n);
    } else {
      CHECK(x.rank() < n);
    }
  }
}
