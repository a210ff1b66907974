#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trimoments/poly.hpp"
#include "trimoments/word.hpp"

namespace trimoments {

/// coeff * f_{alpha,beta}, where f_{alpha,beta}(x) = x^alpha (1-x)^beta / (alpha! beta!).
struct FTerm {
  unsigned alpha = 0;
  unsigned beta = 0;
  Rational coeff{1};
};

/// Finite linear combination of f_{alpha,beta}. Zero coefficients are never
/// stored. Distinct FSums may denote the same polynomial; compare through
/// fsum_to_poly.
class FSum {
 public:
  using Key = std::pair<unsigned, unsigned>;

  FSum() = default;
  explicit FSum(const FTerm& t) { add(t); }

  void add(const FTerm& t);
  FSum& operator+=(const FSum& rhs);
  friend FSum operator*(const FSum& a, const FSum& b);
  FSum& operator*=(const Rational& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of f_{alpha,beta} (zero when absent).
  Rational coefficient(unsigned alpha, unsigned beta) const;

  friend bool operator==(const FSum&, const FSum&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// f_{a,b} f_{a',b'} = C(a+a', a) C(b+b', b) f_{a+a', b+b'}.
FTerm fterm_mul(const FTerm& a, const FTerm& b);

Poly fterm_to_poly(const FTerm& t);
Poly fsum_to_poly(const FSum& f);

/// The unique expansion of p (degree <= total_degree) over
/// f_{i, total_degree - i}, i = 0..total_degree. Throws when the degree is
/// too large.
FSum poly_to_fsum(const Poly& p, unsigned total_degree);

/// The p-fold nest kappa(T, ... kappa(T, f T*) ... T*) for outer = T, or the
/// mirror nest with T* outside and T inside for outer = T*. Computed by
/// iterating kappa2 on polynomials; each input term f_{a,b} yields a
/// combination over f_{i, a+b+p-i}.
FSum nested_parallel_kappa(Letter outer, unsigned p, const FSum& f);

/// phi of the p-line nest around f_{alpha,beta}:
///   C(p+alpha, alpha) / (alpha+beta+p+1)!  for T outside,
///   C(p+beta,  beta)  / (alpha+beta+p+1)!  for T* outside.
Rational phi_nested_closed(Letter outer, unsigned p, unsigned alpha, unsigned beta);

/// Coefficients of the p-nest around f_{alpha,beta} against two candidate
/// closed forms. For T outside the targets are f_{alpha-k, beta+k+p}; for T*
/// outside they are f_{alpha+k+p, beta-k}.
struct NestCoefficientDiagnostic {
  Letter outer;
  unsigned p, alpha, beta;
  std::vector<Rational> computed;           ///< indexed by k
  std::vector<Rational> shifted_binomial;   ///< C(k+p-1, p-1)
  std::vector<Rational> displayed_binomial; ///< C(k+p, p)
  bool matches_shifted = false;
  bool matches_displayed = false;
  bool supported_on_targets = false;        ///< no mass outside the target terms
};

NestCoefficientDiagnostic nest_coefficient_diagnostic(Letter outer, unsigned p, unsigned alpha,
                                                      unsigned beta);

}  // namespace trimoments
