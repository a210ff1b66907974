#pragma once

#include <vector>

#include "trimoments/kappa.hpp"
#include "trimoments/poly.hpp"
#include "trimoments/word.hpp"

namespace trimoments {

/// phi(w) = integral over [0,1] of E(w).
Rational phi_word(const Word& w, unsigned threads = 1);

/// (T^k (T*)^k)^n. Throws std::invalid_argument unless k, n >= 1.
Word power_word(int k, int n);

/// n^{nk} / (nk+1)!
Rational main_formula(int k, int n);

/// Abel polynomial A_n(x; a) = x (x - a n)^{n-1}.
Poly abel_polynomial(int n, const Rational& a = Rational(1));

/// x (x - n)^{n-1} / n!, the closed form stated for E[(T* T)^n].
/// The computed expectation is abel_polynomial(n, -1) / n! instead; the two
/// agree only at n = 1.
Poly abel_expectation(int n);

/// E[(T^k (T*)^k)^n] without partitions: E_0 = 1 and E_n is obtained from
/// (-1)^k E_{n-1}(x - 1) by k antiderivatives, each vanishing at x = 1.
Poly expectation_via_integration(int k, int n);

/// Right-hand side of the n-th derivative expansion,
///   sum over 0 = j_0 < j_1 < ... < j_{2n} < j_{2n+1} = L+1 of
///   (d^n/dx^n E(s_{j_1} ... s_{j_{2n}})) * prod_r E(gap_r).
/// The inner derivative must be a constant; std::logic_error otherwise.
/// Subword expectations come from `cache` (one is created if null).
Poly derivative_formula_rhs(const Word& w, int n, ExpectationCache* cache = nullptr);

/// d^m/dx^m E(w) for a balanced word of length 2m, as a constant.
Rational signed_word_top_derivative(const Word& w, ExpectationCache* cache = nullptr);

/// The words of the three closed mixed-moment formulas:
///   1: T^{n+1} T*^n T^n T*^{n+1}
///   2: T^{n+1} T*^n T^n T*^n T^n T*^{n+1}
///   3: T^{n+2} T*^n T^n T*^n T^n T*^{n+2}
/// Empty blocks vanish. Throws std::invalid_argument for unknown forms.
Word mixed_moment_word(int form, int n);

/// The closed formula value for the given form, evaluated literally.
Rational mixed_moment_closed(int form, int n);

/// A(A*) where A = T^{k_1} T*^{k_2} T^{k_3} ... ; the palindromic words of
/// the alternating-power recursion.
Word palindromic_word(const std::vector<int>& exponents);

}  // namespace trimoments
