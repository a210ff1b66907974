#include "trimoments/fbasis.hpp"

#include <stdexcept>

#include "trimoments/kappa.hpp"

namespace trimoments {

void FSum::add(const FTerm& t) {
  if (t.coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({t.alpha, t.beta}, t.coeff);
  if (!inserted) {
    it->second += t.coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FSum& FSum::operator+=(const FSum& rhs) {
  for (const auto& [key, c] : rhs.terms_) add({key.first, key.second, c});
  return *this;
}

FSum operator*(const FSum& a, const FSum& b) {
  FSum out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add(fterm_mul({ka.first, ka.second, ca}, {kb.first, kb.second, cb}));
    }
  }
  return out;
}

FSum& FSum::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Rational FSum::coefficient(unsigned alpha, unsigned beta) const {
  const auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? Rational{} : it->second;
}

FTerm fterm_mul(const FTerm& a, const FTerm& b) {
  const Rational c = a.coeff * b.coeff * Rational(binomial(a.alpha + b.alpha, a.alpha)) *
                     Rational(binomial(a.beta + b.beta, a.beta));
  return {a.alpha + b.alpha, a.beta + b.beta, c};
}

Poly fterm_to_poly(const FTerm& t) {
  Poly p = Poly::monomial(t.coeff / Rational(factorial(t.alpha) * factorial(t.beta)), t.alpha);
  const Poly one_minus_x{Rational(1), Rational(-1)};
  for (unsigned i = 0; i < t.beta; ++i) p *= one_minus_x;
  return p;
}

Poly fsum_to_poly(const FSum& f) {
  Poly out;
  for (const auto& [key, c] : f.terms()) out += fterm_to_poly({key.first, key.second, c});
  return out;
}

FSum poly_to_fsum(const Poly& p, unsigned total_degree) {
  if (p.degree() > static_cast<int>(total_degree)) {
    throw std::invalid_argument("poly_to_fsum: degree " + std::to_string(p.degree()) +
                                " exceeds " + std::to_string(total_degree));
  }
  // Bernstein change of basis: x^j = sum_{i>=j} C(i,j)/C(D,j) B_{i,D}, and
  // B_{i,D} = D! f_{i, D-i}.
  const Rational d_fact(factorial(total_degree));
  FSum out;
  for (unsigned i = 0; i <= total_degree; ++i) {
    Rational c;
    for (unsigned j = 0; j <= i && j < p.coefficients().size(); ++j) {
      c += p.coefficients()[j] * Rational(binomial(i, j)) / Rational(binomial(total_degree, j));
    }
    out.add({i, total_degree - i, c * d_fact});
  }
  return out;
}

FSum nested_parallel_kappa(Letter outer, unsigned p, const FSum& f) {
  if (p == 0) throw std::invalid_argument("nested_parallel_kappa: p must be positive");
  FSum out;
  for (const auto& [key, c] : f.terms()) {
    Poly q = fterm_to_poly({key.first, key.second, c});
    for (unsigned step = 0; step < p; ++step) q = kappa2(outer, q, flip(outer));
    out += poly_to_fsum(q, key.first + key.second + p);
  }
  return out;
}

Rational phi_nested_closed(Letter outer, unsigned p, unsigned alpha, unsigned beta) {
  if (p == 0) throw std::invalid_argument("phi_nested_closed: p must be positive");
  const unsigned top = outer == Letter::T ? alpha : beta;
  return Rational(binomial(p + top, top), factorial(alpha + beta + p + 1));
}

NestCoefficientDiagnostic nest_coefficient_diagnostic(Letter outer, unsigned p, unsigned alpha,
                                                      unsigned beta) {
  NestCoefficientDiagnostic d{outer, p, alpha, beta, {}, {}, {}};
  const FSum nest = nested_parallel_kappa(outer, p, FSum(FTerm{alpha, beta, 1}));
  const unsigned range = outer == Letter::T ? alpha : beta;
  FSum targets_only;
  for (unsigned k = 0; k <= range; ++k) {
    const unsigned a = outer == Letter::T ? alpha - k : alpha + k + p;
    const unsigned b = outer == Letter::T ? beta + k + p : beta - k;
    const Rational c = nest.coefficient(a, b);
    d.computed.push_back(c);
    targets_only.add({a, b, c});
    d.shifted_binomial.emplace_back(binomial(k + p - 1, p - 1));
    d.displayed_binomial.emplace_back(binomial(k + p, p));
  }
  d.supported_on_targets = targets_only == nest;
  d.matches_shifted = d.supported_on_targets && d.computed == d.shifted_binomial;
  d.matches_displayed = d.supported_on_targets && d.computed == d.displayed_binomial;
  return d;
}

}  // namespace trimoments
