#include <cmath>
#include <random>

#include "doctest.h"
#include "procrec/error.hpp"
#include "procrec/symmetric_eigen.hpp"

using namespace procrec;

namespace {

DenseMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("diagonal input is returned sorted") {
  DenseMatrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 3.0;
  d(2, 2) = 2.0;
  auto e = jacobi_eigen(d);
  CHECK(e.converged);
  CHECK(e.values == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(e.vectors(1, 0) == 1.0);
  CHECK(e.vectors(2, 1) == 1.0);
  CHECK(e.vectors(0, 2) == 1.0);
}

TEST_CASE("2x2 closed form") {
  DenseMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  auto e = jacobi_eigen(m);
  CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  // (1,1)/sqrt2 and, by the sign rule, (1,-1)/sqrt2 with the tie going to index 0
  CHECK(e.vectors(0, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(e.vectors(1, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(e.vectors(0, 1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(e.vectors(1, 1) == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("non-square input is rejected") {
  CHECK_THROWS_AS(jacobi_eigen(DenseMatrix(2, 3)), InputError);
}

TEST_CASE("random symmetric matrices decompose") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 9;
    auto a = random_symmetric(rng, n);
    auto e = jacobi_eigen(a);
    REQUIRE(e.converged);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(e.values[i] >= e.values[i + 1]);
    for (std::size_t i = 0; i < n; ++i) {
      // A v = lambda v
      for (std::size_t r = 0; r < n; ++r) {
        double av = 0.0;
        for (std::size_t c = 0; c < n; ++c) av += a(r, c) * e.vectors(c, i);
        CHECK(std::abs(av - e.values[i] * e.vectors(r, i)) < 1e-10);
      }
      // sign convention
      std::size_t arg = 0;
      for (std::size_t r = 1; r < n; ++r)
        if (std::abs(e.vectors(r, i)) > std::abs(e.vectors(arg, i))) arg = r;
      CHECK(e.vectors(arg, i) > 0.0);
    }
  }
}
