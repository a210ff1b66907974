#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "trimoments/rational.hpp"

namespace trimoments {

/// Univariate polynomial in x with exact rational coefficients.
///
/// Dense, ascending storage: coefficient i multiplies x^i. Trailing zero
/// coefficients are always stripped, so the zero polynomial has no
/// coefficients and equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(1, 1); }
  static Poly one() { return constant(1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form in descending powers, e.g. "1/2*x^2 - 2*x + 3/2".
  std::string str() const;

  /// Coefficient list "[c0, c1, ...]" with exact rationals.
  std::string coefficient_list() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Rational& c, const Poly& p);

/// x -> integral of p over [0, x].
Poly integral_from_zero(const Poly& p);

/// x -> integral of p over [x, 1].
Poly integral_to_one(const Poly& p);

/// The order-fold formal derivative.
Poly derivative(const Poly& p, unsigned order = 1);

/// The antiderivative q of p with q(c) = 0.
Poly antiderivative_vanishing_at(const Poly& p, const Rational& c);

/// x -> p(x - c).
Poly shift(const Poly& p, const Rational& c);

/// x -> p(1 - x).
Poly reflect(const Poly& p);

Rational evaluate(const Poly& p, const Rational& x);

/// Integral of p over [0, 1].
Rational definite_integral_01(const Poly& p);

}  // namespace trimoments
