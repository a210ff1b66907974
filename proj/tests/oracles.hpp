#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the library except for the Rational carrier type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "trimoments/rational.hpp"

namespace oracle {

using trimoments::BigInt;
using trimoments::Rational;

/// Catalan numbers by C_m = sum_i C_i C_{m-1-i}.
inline std::uint64_t catalan(int m) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= m; ++j) {
    for (int i = 0; i < j; ++i) c[j] += c[i] * c[j - 1 - i];
  }
  return c[m];
}

/// Pascal's triangle.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt ipow(unsigned base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// n^{nk} / (nk+1)!
inline Rational main_value(int k, int n) {
  const auto nk = static_cast<unsigned>(n * k);
  return Rational(ipow(static_cast<unsigned>(n), nk), factorial(nk + 1));
}

/// Quadratic scan for a < b < c < d with {a,c}, {b,d} both lines.
inline bool crossing(const std::vector<std::pair<int, int>>& lines) {
  for (const auto& [a, c] : lines) {
    for (const auto& [b, d] : lines) {
      if (a < b && b < c && c < d) return true;
    }
  }
  return false;
}

// Minimal ascending-coefficient polynomials, untrimmed.
using P = std::vector<Rational>;

inline P padd(P a, const P& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline P pmul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Rational peval(const P& a, const Rational& x) {
  Rational r, xp = 1;
  for (const auto& c : a) {
    r += c * xp;
    xp *= x;
  }
  return r;
}

/// x -> int_0^x
inline P pint0(const P& a) {
  P r(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i] / Rational(static_cast<long>(i + 1));
  return r;
}

/// x -> int_x^1
inline P pint1(const P& a) {
  P r = pint0(a);
  const Rational total = peval(r, 1);
  for (auto& c : r) c = -c;
  if (r.empty()) r.resize(1);
  r[0] += total;
  return r;
}

inline Rational pintegral01(const P& a) { return peval(pint0(a), 1); }

/// Drop trailing zeros so results compare with the library's canonical form.
inline P trim(P a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

/// E(w) by brute force: every perfect matching of the positions is
/// generated, crossing ones are discarded with the quadratic scan, and each
/// survivor is evaluated by recursion on the arc structure. Signs are +1
/// (T) or -1 (T*).
class Expectation {
 public:
  explicit Expectation(std::vector<int> signs) : s_(std::move(signs)) {}

  P operator()() {
    if (s_.size() % 2) return {};
    partner_.assign(s_.size(), -1);
    total_ = {};
    match(0);
    return trim(total_);
  }

 private:
  void match(std::size_t from) {
    while (from < s_.size() && partner_[from] >= 0) ++from;
    if (from == s_.size()) {
      std::vector<std::pair<int, int>> lines;
      for (std::size_t i = 0; i < s_.size(); ++i) {
        if (static_cast<int>(i) < partner_[i]) lines.emplace_back(static_cast<int>(i), partner_[i]);
      }
      if (!crossing(lines)) total_ = padd(total_, range(0, static_cast<int>(s_.size())));
      return;
    }
    for (std::size_t j = from + 1; j < s_.size(); ++j) {
      if (partner_[j] >= 0) continue;
      partner_[from] = static_cast<int>(j);
      partner_[j] = static_cast<int>(from);
      match(from + 1);
      partner_[from] = partner_[j] = -1;
    }
  }

  // Product of the arcs covering [a, b), each arc applying the variance to
  // the product of what it encloses.
  P range(int a, int b) const {
    P out{Rational(1)};
    for (int i = a; i < b;) {
      const int j = partner_[i];
      const P inner = range(i + 1, j);
      P arc;
      if (s_[i] == 1 && s_[j] == -1) {
        arc = pint1(inner);
      } else if (s_[i] == -1 && s_[j] == 1) {
        arc = pint0(inner);
      }
      out = pmul(out, arc);
      i = j + 1;
    }
    return out;
  }

  std::vector<int> s_;
  std::vector<int> partner_;
  P total_;
};

inline P expectation(const std::vector<int>& signs) { return Expectation(signs)(); }

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<int> signs(std::size_t length) {
    std::vector<int> s(length);
    for (auto& v : s) v = integer(0, 1) ? 1 : -1;
    return s;
  }

  /// A balanced sign sequence of length 2m (uniform shuffle).
  std::vector<int> balanced(std::size_t m) {
    std::vector<int> s(2 * m, 1);
    for (std::size_t i = m; i < 2 * m; ++i) s[i] = -1;
    std::shuffle(s.begin(), s.end(), rng_);
    return s;
  }

  Rational rational(int span = 9) {
    return Rational(integer(-span, span), integer(1, span));
  }

  P poly(int max_degree) {
    P p(static_cast<std::size_t>(integer(0, max_degree + 1)));
    for (auto& c : p) c = rational();
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
