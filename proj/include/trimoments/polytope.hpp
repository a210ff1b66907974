#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trimoments/poly.hpp"

namespace trimoments {

/// Occupancy counts (a_0, ..., a_{n-1}) of the unit cells (l, l+1).
struct Composition {
  std::vector<int> counts;
  int total() const;
};

/// All compositions of `total` into n nonnegative parts with
/// a_0 + ... + a_{j-1} >= j*k + offset for 1 <= j <= n-1.
std::vector<Composition> staircase_compositions(int k, int n, int total, int offset);

/// Exact volume of V_{k,n} = {0 < x_0 < ... < x_{nk}, x_{jk} < j}: the sum of
/// prod_l 1/a_l! over feasible occupancies of nk+1 points.
Rational volume_exact(int k, int n);

/// Volume of {x < x_1 < ... < x_{nk}, x_{jk} < j} as a polynomial in x,
/// valid for x < 1.
Poly volume_polynomial(int k, int n);

/// Monte Carlo estimate with its standard error.
struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  /// Identifies the generator and the stream-splitting scheme.
  std::string generator;
};

/// Samples are drawn in fixed blocks, each with its own generator seeded from
/// (seed, block index), so results do not depend on the thread count.
inline constexpr std::uint64_t kMonteCarloBlock = 4096;
std::string monte_carlo_generator_name();

/// Fraction of sorted uniform (0,n)^{nk+1} samples inside V_{k,n}, rescaled
/// by n^{nk+1}/(nk+1)!.
MonteCarloEstimate volume_montecarlo(int k, int n, std::uint64_t samples, std::uint64_t seed,
                                     unsigned threads = 1);

/// Whether a sorted tuple (x_0, ..., x_{nk}) lies in V_{k,n}.
bool in_staircase_polytope(std::span<const double> sorted, int k, int n);

/// Number of m in {0, ..., n-1} for which the cyclic shift m + x lies in
/// V_{k,n}; x is sorted in (0, n) with no integer coordinates.
int raney_shift_count(std::span<const double> sorted, int k, int n);

/// True iff raney_shift_count is exactly 1 on every random sample.
bool raney_shift_check(int k, int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace trimoments
