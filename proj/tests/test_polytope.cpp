#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "trimoments/kappa.hpp"
#include "trimoments/moments.hpp"
#include "trimoments/polytope.hpp"

using namespace trimoments;

TEST_CASE("staircase compositions") {
  const auto c = staircase_compositions(1, 2, 3, 1);
  REQUIRE(c.size() == 2);
  CHECK(c[0].counts == std::vector<int>{2, 1});
  CHECK(c[1].counts == std::vector<int>{3, 0});
  CHECK(c[1].total() == 3);
  CHECK(staircase_compositions(3, 1, 4, 1).size() == 1);
  CHECK_THROWS_AS(staircase_compositions(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("exact volume examples") {
  CHECK(volume_exact(1, 1) == Rational(1, 2));
  CHECK(volume_exact(1, 2) == Rational(2, 3));
  CHECK(volume_exact(2, 2) == Rational(2, 15));
}

TEST_CASE("property: n vol V = n^{nk+1}/(nk+1)!, nk <= 10") {
  for (int k = 1; k <= 10; ++k) {
    for (int n = 1; n * k <= 10; ++n) {
      const auto nk = static_cast<unsigned>(n * k);
      CHECK(Rational(n) * volume_exact(k, n) ==
            Rational(oracle::ipow(static_cast<unsigned>(n), nk + 1), oracle::factorial(nk + 1)));
      CHECK(volume_exact(k, n) == oracle::main_value(k, n));
    }
  }
}

TEST_CASE("region polynomial") {
  const Poly x = Poly::x(), one = Poly::one();
  CHECK(volume_polynomial(1, 1) == one - x);
  CHECK(volume_polynomial(1, 2) == (one - x) + Rational(1, 2) * (one - x) * (one - x));
  CHECK(evaluate(volume_polynomial(1, 2), Rational(1, 2)) == Rational(5, 8));
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n * k <= 6; ++n) {
      CHECK(volume_polynomial(k, n) == expectation_direct(power_word(k, n)));
      CHECK(volume_exact(k, n) == phi_word(power_word(k, n)));
    }
  }
}

TEST_CASE("membership and shifts") {
  const std::vector<double> inside{0.2, 0.5, 1.5};
  CHECK(in_staircase_polytope(inside, 1, 2));
  const std::vector<double> late{0.2, 1.1, 1.5};
  CHECK_FALSE(in_staircase_polytope(late, 1, 2));
  CHECK(raney_shift_count(late, 1, 2) == 1);
  CHECK(raney_shift_count(inside, 1, 2) == 1);
}

TEST_CASE("Monte Carlo volume") {
  for (auto [k, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    const auto est = volume_montecarlo(k, n, 100000, 42);
    const double exact = oracle::main_value(k, n).to_double();
    CHECK(est.samples == 100000);
    CHECK(est.seed == 42);
    CHECK(est.std_error >= 0);
    CHECK((est.std_error == 0) == (n == 1));
    CHECK(std::abs(est.estimate - exact) <= 3 * est.std_error);
  }
  const auto a = volume_montecarlo(2, 2, 20000, 9, 1);
  const auto b = volume_montecarlo(2, 2, 20000, 9, 3);
  const auto c = volume_montecarlo(2, 2, 20000, 10, 1);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);
  CHECK(a.hits != c.hits);
  CHECK_FALSE(a.generator.empty());
  CHECK_THROWS_AS(volume_montecarlo(1, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("Raney cyclic shift") {
  CHECK(raney_shift_check(1, 2, 10000, 3));
  CHECK(raney_shift_check(2, 3, 10000, 3));
  CHECK(raney_shift_check(4, 1, 100, 3));
}
