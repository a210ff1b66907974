#include "trimoments/moments.hpp"

#include <stdexcept>

namespace trimoments {

Rational phi_word(const Word& w, unsigned threads) {
  return definite_integral_01(expectation_direct(w, threads));
}

Word power_word(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("power_word requires k, n >= 1");
  std::vector<int> blocks;
  for (int i = 0; i < n; ++i) {
    blocks.push_back(k);
    blocks.push_back(k);
  }
  return alternating_blocks(blocks);
}

Rational main_formula(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("main_formula requires k, n >= 1");
  const auto nk = static_cast<unsigned>(n * k);
  return Rational(power(n, nk), factorial(nk + 1));
}

Poly abel_polynomial(int n, const Rational& a) {
  if (n < 1) throw std::invalid_argument("abel_polynomial requires n >= 1");
  Poly p = Poly::x();
  const Poly factor{-(a * Rational(n)), Rational(1)};
  for (int i = 0; i < n - 1; ++i) p *= factor;
  return p;
}

Poly abel_expectation(int n) {
  if (n < 1) throw std::invalid_argument("abel_expectation requires n >= 1");
  return Rational(1, factorial(static_cast<unsigned>(n))) * abel_polynomial(n);
}

Poly expectation_via_integration(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("expectation_via_integration requires k >= 1, n >= 0");
  Poly e = Poly::one();
  const Rational sign = k % 2 == 0 ? 1 : -1;
  for (int step = 0; step < n; ++step) {
    Poly g = sign * shift(e, 1);
    for (int i = 0; i < k; ++i) g = antiderivative_vanishing_at(g, 1);
    e = std::move(g);
  }
  return e;
}

namespace {

struct DerivativeExpansion {
  const Word& w;
  int n;
  ExpectationCache& cache;
  std::vector<std::size_t> chosen;  // 1-based positions j_1 < ... < j_{2n}
  Poly total;

  // Gap between consecutive chosen positions (exclusive), 1-based bounds.
  const Poly& gap(std::size_t after, std::size_t before) {
    return cache.expectation(w.subword(after, before - after - 1));
  }

  void run(std::size_t next_min, Poly partial) {
    const std::size_t length = w.size();
    if (chosen.size() == static_cast<std::size_t>(2 * n)) {
      const Poly& last = gap(chosen.back(), length + 1);
      if (last.is_zero()) return;
      std::vector<Letter> picked;
      picked.reserve(chosen.size());
      for (auto j : chosen) picked.push_back(w[j - 1]);
      const Poly inner = derivative(cache.expectation(Word(std::move(picked))),
                                    static_cast<unsigned>(n));
      if (!inner.is_constant()) {
        throw std::logic_error("inner derivative is not constant");
      }
      if (inner.is_zero()) return;
      total += inner.coefficient(0) * (partial * last);
      return;
    }
    const std::size_t remaining = static_cast<std::size_t>(2 * n) - chosen.size();
    const std::size_t previous = chosen.empty() ? 0 : chosen.back();
    for (std::size_t j = next_min; j + remaining - 1 <= length; ++j) {
      const Poly& g = gap(previous, j);
      if (g.is_zero()) continue;
      chosen.push_back(j);
      run(j + 1, partial * g);
      chosen.pop_back();
    }
  }
};

}  // namespace

Poly derivative_formula_rhs(const Word& w, int n, ExpectationCache* cache) {
  if (n < 1) throw std::invalid_argument("derivative_formula_rhs requires n >= 1");
  if (w.size() % 2 != 0) throw std::invalid_argument("derivative_formula_rhs requires even length");
  ExpectationCache local;
  DerivativeExpansion expansion{w, n, cache ? *cache : local, {}, {}};
  if (w.size() < static_cast<std::size_t>(2 * n)) return {};
  expansion.run(1, Poly::one());
  return expansion.total;
}

Rational signed_word_top_derivative(const Word& w, ExpectationCache* cache) {
  if (w.size() % 2 != 0 || !w.balanced()) {
    throw std::invalid_argument("signed_word_top_derivative requires a balanced word");
  }
  ExpectationCache local;
  ExpectationCache& c = cache ? *cache : local;
  const Poly d = derivative(c.expectation(w), static_cast<unsigned>(w.size() / 2));
  return d.coefficient(0);
}

Word mixed_moment_word(int form, int n) {
  if (n < 0) throw std::invalid_argument("mixed_moment_word requires n >= 0");
  switch (form) {
    case 1:
      return alternating_blocks({n + 1, n, n, n + 1});
    case 2:
      return alternating_blocks({n + 1, n, n, n, n, n + 1});
    case 3:
      return alternating_blocks({n + 2, n, n, n, n, n + 2});
    default:
      throw std::invalid_argument("unknown mixed-moment form " + std::to_string(form));
  }
}

Rational mixed_moment_closed(int form, int n) {
  if (n < 0) throw std::invalid_argument("mixed_moment_closed requires n >= 0");
  const auto u = static_cast<unsigned>(n);
  const Rational fact_n1(factorial(u + 1));
  switch (form) {
    case 1:
      return Rational(1, 2) * (Rational(power(2, 2 * u + 2), factorial(2 * u + 2)) -
                               Rational(1) / (fact_n1 * fact_n1));
    case 2:
      return Rational(power(3, 3 * u + 1), factorial(3 * u + 2)) -
             Rational(1) / (Rational(factorial(u)) * fact_n1 * fact_n1);
    case 3:
      return Rational(power(3, 3 * u + 2), factorial(3 * u + 3)) -
             Rational(power(2, 2 * u), factorial(u + 2) * factorial(2 * u + 1)) -
             Rational(power(2, 2 * u + 3), 3 * fact_n1.numerator() * factorial(2 * u + 2)) +
             Rational(1) / (Rational(3) * fact_n1 * fact_n1 * fact_n1);
    default:
      throw std::invalid_argument("unknown mixed-moment form " + std::to_string(form));
  }
}

Word palindromic_word(const std::vector<int>& exponents) {
  const Word left = alternating_blocks(exponents);
  std::vector<Letter> right;
  right.reserve(left.size());
  for (auto it = left.letters().rbegin(); it != left.letters().rend(); ++it) {
    right.push_back(flip(*it));
  }
  return left + Word(std::move(right));
}

}  // namespace trimoments
