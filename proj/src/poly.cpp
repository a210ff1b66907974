#include "trimoments/poly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace trimoments {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Rational Poly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) {
    a *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) {
    a = -a;
  }
  return r;
}

std::string Poly::str() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) {
      os << mag << "*";
    }
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string Poly::coefficient_list() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Rational& c, const Poly& p) { return c * p; }

Poly integral_from_zero(const Poly& p) {
  const auto& a = p.coefficients();
  std::vector<Rational> out(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] = a[i] / Rational(i + 1);
  }
  return Poly(std::move(out));
}

Poly integral_to_one(const Poly& p) {
  // Integral over [x, 1] = F(1) - F(x) with F(0) = 0.
  const Poly antiderivative = integral_from_zero(p);
  return Poly::constant(antiderivative(Rational(1))) - antiderivative;
}

Poly derivative(const Poly& p, unsigned order) {
  std::vector<Rational> a = p.coefficients();
  for (unsigned step = 0; step < order && !a.empty(); ++step) {
    for (std::size_t i = 1; i < a.size(); ++i) {
      a[i - 1] = a[i] * Rational(i);
    }
    a.pop_back();
  }
  return Poly(std::move(a));
}

Poly antiderivative_vanishing_at(const Poly& p, const Rational& c) {
  const Poly q = integral_from_zero(p);
  return q - Poly::constant(q(c));
}

Poly shift(const Poly& p, const Rational& c) {
  // Horner evaluation in the ring of polynomials at (x - c).
  const Poly linear{-c, Rational(1)};
  Poly acc;
  const auto& a = p.coefficients();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= linear;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly reflect(const Poly& p) {
  const Poly linear{Rational(1), Rational(-1)};
  Poly acc;
  const auto& a = p.coefficients();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= linear;
    acc += Poly::constant(*it);
  }
  return acc;
}

Rational evaluate(const Poly& p, const Rational& x) { return p(x); }

Rational definite_integral_01(const Poly& p) {
  Rational acc;
  const auto& a = p.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i] / Rational(i + 1);
  }
  return acc;
}

}  // namespace trimoments
