#include <catch_amalgamated.hpp>

#include <random>

#include "tdq/elimination.hpp"
#include "tdq/subspace.hpp"

using tdq::Matrix;
using tdq::Scalar;
using tdq::Subspace;
using tdq::Vector;

namespace {

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vector> vs;
  const std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(n);
    for (auto& x : v) x = Scalar(static_cast<long long>(rng() % 5) - 2);
    vs.push_back(v);
  }
  return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("span is canonical") {
  const std::vector<Vector> a{{Scalar(2), Scalar(4)}};
  const std::vector<Vector> b{{Scalar(-1), Scalar(-2)}};
  CHECK(Subspace::span(2, a) == Subspace::span(2, b));
  CHECK(Subspace::span(2, a).dim() == 1);
  CHECK(Subspace::span(2, a).contains({Scalar(3), Scalar(6)}));
  CHECK_FALSE(Subspace::span(2, a).contains({Scalar(1), Scalar(0)}));
}

TEST_CASE("image, kernel and rank-nullity") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const Subspace ker = Subspace::kernel(m);
  CHECK(Subspace::image(m).dim() + ker.dim() == 3);
  CHECK(ker.dim() == 1);
  for (const auto& v : ker.basis()) CHECK(m * v == Vector(3, Scalar(0)));
}

TEST_CASE("Grassmann identity and lattice laws on random subspaces") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const Subspace u = random_subspace(rng, n), v = random_subspace(rng, n);
    const Subspace sum = u + v;
    const Subspace cap = intersect(u, v);
    CHECK(sum.dim() + cap.dim() == u.dim() + v.dim());
    CHECK(cap.contained_in(u));
    CHECK(cap.contained_in(v));
    CHECK(u.contained_in(sum));
    CHECK(intersect(u, v) == intersect(v, u));
    CHECK(u + v == v + u);
  }
}

TEST_CASE("direct sums") {
  const std::vector<Vector> e1{{Scalar(1), Scalar(0)}};
  const std::vector<Vector> e2{{Scalar(1), Scalar(1)}};
  const std::vector<Subspace> parts{Subspace::span(2, e1), Subspace::span(2, e2)};
  CHECK(tdq::is_direct_sum_decomposition(parts));
  const std::vector<Subspace> repeated{Subspace::span(2, e1), Subspace::span(2, e1)};
  CHECK_FALSE(tdq::is_direct_sum_decomposition(repeated));
}

TEST_CASE("incremental basis") {
  tdq::IncrementalBasis b(3);
  CHECK(b.add({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(b.add({Scalar(1), Scalar(1), Scalar(0)}));
  CHECK_FALSE(b.add({Scalar(1), Scalar(2), Scalar(1)}));
  CHECK(b.size() == 2);
  CHECK(b.reduce({Scalar(2), Scalar(3), Scalar(1)}) == Vector(3, Scalar(0)));
}
