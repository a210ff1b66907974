#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "trimoments/poly.hpp"

using namespace trimoments;

namespace {

Poly from(const oracle::P& p) { return Poly(p); }

const Poly x = Poly::x();
const Poly one = Poly::one();

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(BigInt(0), BigInt(7)).denominator() == 1);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
}

TEST_CASE("big integer helpers against Pascal and loops") {
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(factorial(n) == oracle::factorial(n));
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
  }
  CHECK(power(BigInt(4), 12) == 16777216);
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("ring arithmetic") {
  CHECK(add(one - x, x) == one);
  CHECK(mul(x, x) == Poly::monomial(1, 2));
  CHECK(mul(one - x, one - x) == Poly{1, -2, 1});
  CHECK(scale(Rational(1, 2), Poly{2, 4}) == Poly{1, 2});
  CHECK((x - x).is_zero());
  CHECK((x - x).degree() == -1);
  CHECK(Poly{1, 0, 0}.degree() == 0);
}

TEST_CASE("integrals") {
  CHECK(integral_from_zero(one) == x);
  CHECK(integral_from_zero(x) == Poly{0, 0, Rational(1, 2)});
  CHECK(integral_from_zero(Poly{3, 2}) == Poly{0, 3, 1});
  CHECK(integral_to_one(one) == one - x);
  CHECK(integral_to_one(x) == Poly{Rational(1, 2), 0, Rational(-1, 2)});
  CHECK(integral_to_one(Poly{}).is_zero());
}

TEST_CASE("derivative and antiderivative") {
  CHECK(derivative(Poly{0, 0, 1}, 2) == Poly{2});
  CHECK(derivative(one - x) == Poly{-1});
  CHECK(derivative(Poly{5}).is_zero());
  CHECK(antiderivative_vanishing_at(one, 1) == x - one);
  CHECK(antiderivative_vanishing_at(x - one, 1) == Poly{Rational(1, 2), -1, Rational(1, 2)});
  CHECK(antiderivative_vanishing_at(Poly{}, 1).is_zero());
}

TEST_CASE("shift, reflect, evaluate") {
  CHECK(shift(x, 1) == x - one);
  CHECK(shift(Poly{0, 0, 1}, 1) == Poly{1, -2, 1});
  const Poly p{3, -1, Rational(2, 7), 5};
  CHECK(shift(p, 0) == p);
  CHECK(reflect(x) == one - x);
  CHECK(reflect(one - x) == x);
  CHECK(reflect(Poly{4}) == Poly{4});
  CHECK(definite_integral_01(one - x) == Rational(1, 2));
  const Poly e = mul(one - x, one - x) + scale(Rational(1, 2), one - mul(x, x));
  CHECK(definite_integral_01(e) == Rational(2, 3));
  CHECK(evaluate(Poly{1, -2, 1}, 1) == 0);
}

TEST_CASE("rendering") {
  CHECK(Poly{Rational(3, 2), -2, Rational(1, 2)}.str() == "1/2*x^2 - 2*x + 3/2");
  CHECK(Poly{Rational(3, 2), -2, Rational(1, 2)}.coefficient_list() == "[3/2, -2, 1/2]");
  CHECK(Poly{}.str() == "0");
  CHECK(Poly{}.coefficient_list() == "[]");
}

TEST_CASE("property: calculus identities on random polynomials") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ps = gen.poly(6);
    const auto qs = gen.poly(6);
    const Poly p = from(ps), q = from(qs);
    const Rational c = gen.rational();

    CHECK(derivative(integral_from_zero(p)) == p);
    CHECK(evaluate(integral_from_zero(p), 0) == 0);
    CHECK(derivative(integral_to_one(p)) == -p);
    CHECK(evaluate(integral_to_one(p), 1) == 0);
    CHECK(integral_from_zero(p) + integral_to_one(p) == Poly::constant(definite_integral_01(p)));
    CHECK(reflect(reflect(p)) == p);
    CHECK(reflect(p * q) == reflect(p) * reflect(q));
    CHECK(derivative(antiderivative_vanishing_at(p, c)) == p);
    CHECK(evaluate(antiderivative_vanishing_at(p, c), c) == 0);
    CHECK(evaluate(shift(p, c), c + 1) == evaluate(p, 1));

    // Against the oracle arithmetic.
    CHECK(p * q == from(oracle::trim(oracle::pmul(ps, qs))));
    CHECK(p + q == from(oracle::trim(oracle::padd(ps, qs))));
    CHECK(evaluate(p, c) == oracle::peval(ps, c));
    CHECK(definite_integral_01(p) == oracle::pintegral01(ps));
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}
