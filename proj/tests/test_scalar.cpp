#include <catch_amalgamated.hpp>

#include <random>

#include "tdq/qseries.hpp"
#include "tdq/scalar.hpp"

using tdq::Scalar;

TEST_CASE("parse and print") {
  CHECK(Scalar::parse("3").str() == "3");
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK(Scalar::parse("0/5").is_zero());
  CHECK(Scalar::parse("10/4") == Scalar(5, 2));
  CHECK_THROWS_AS(Scalar::parse("10/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), tdq::ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inverse(), tdq::ArithmeticError);
  CHECK_THROWS_AS(pow(Scalar(0), -1), tdq::ArithmeticError);
}

TEST_CASE("pow") {
  CHECK(pow(Scalar(2), 10) == Scalar(1024));
  CHECK(pow(Scalar(2), -3) == Scalar(1, 8));
  CHECK(pow(Scalar(-3, 2), 0) == Scalar(1));
  CHECK(pow(Scalar(-3, 2), 3) == Scalar(-27, 8));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
  auto draw = [&] { return Scalar(num(rng), den(rng)); };
  for (int k = 0; k < 300; ++k) {
    const Scalar x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar(0));
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("q-Pochhammer recurrence and q-numbers") {
  const Scalar q(2, 3);
  const Scalar c(5, 7);
  CHECK(tdq::qpochhammer(c, q, 0) == Scalar(1));
  for (unsigned n = 0; n < 6; ++n) {
    CHECK(tdq::qpochhammer(c, q, n + 1) ==
          tdq::qpochhammer(c, q, n) * (Scalar(1) - c * pow(q, n)));
  }
  CHECK(tdq::qnumber(1, q) == Scalar(1));
  CHECK(tdq::qnumber(2, q) == q + q.inverse());
  for (long long n = 1; n < 5; ++n) {
    // [n+1] = [2][n] - [n-1]
    CHECK(tdq::qnumber(n + 1, q) == tdq::qnumber(2, q) * tdq::qnumber(n, q) - tdq::qnumber(n - 1, q));
  }
}
