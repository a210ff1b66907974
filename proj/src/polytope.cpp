#include "trimoments/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "trimoments/parallel.hpp"

namespace trimoments {

int Composition::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

namespace {

void fill_compositions(int k, int n, int total, int offset, std::vector<int>& prefix, int used,
                       std::vector<Composition>& out) {
  const int cell = static_cast<int>(prefix.size());
  if (cell == n - 1) {
    prefix.push_back(total - used);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  // After this cell the prefix covers cells 0..cell, i.e. j = cell + 1.
  const int need = (cell + 1) * k + offset;
  for (int a = std::max(0, need - used); used + a <= total; ++a) {
    prefix.push_back(a);
    fill_compositions(k, n, total, offset, prefix, used + a, out);
    prefix.pop_back();
  }
}

void require_positive(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("polytope requires k, n >= 1");
}

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

void draw_sorted(std::mt19937_64& gen, int n, std::vector<double>& x) {
  std::uniform_real_distribution<double> uniform(0.0, static_cast<double>(n));
  for (auto& v : x) v = uniform(gen);
  std::sort(x.begin(), x.end());
}

}  // namespace

std::vector<Composition> staircase_compositions(int k, int n, int total, int offset) {
  require_positive(k, n);
  std::vector<Composition> out;
  std::vector<int> prefix;
  fill_compositions(k, n, total, offset, prefix, 0, out);
  return out;
}

Rational volume_exact(int k, int n) {
  Rational total;
  for (const auto& c : staircase_compositions(k, n, n * k + 1, 1)) {
    BigInt denom = 1;
    for (int a : c.counts) denom *= factorial(static_cast<unsigned>(a));
    total += Rational(1, denom);
  }
  return total;
}

Poly volume_polynomial(int k, int n) {
  Poly total;
  const Poly one_minus_x{Rational(1), Rational(-1)};
  for (const auto& c : staircase_compositions(k, n, n * k, 0)) {
    BigInt denom = 1;
    for (int a : c.counts) denom *= factorial(static_cast<unsigned>(a));
    Poly term = Poly::constant(Rational(1, denom));
    for (int i = 0; i < c.counts.front(); ++i) term *= one_minus_x;
    total += term;
  }
  return total;
}

std::string monte_carlo_generator_name() {
  return "mt19937_64 seeded by seed_seq(seed, block); block=" + std::to_string(kMonteCarloBlock);
}

bool in_staircase_polytope(std::span<const double> sorted, int k, int n) {
  for (int j = 1; j < n; ++j) {
    if (!(sorted[static_cast<std::size_t>(j * k)] < static_cast<double>(j))) return false;
  }
  return sorted.back() < static_cast<double>(n) && sorted.front() > 0.0;
}

MonteCarloEstimate volume_montecarlo(int k, int n, std::uint64_t samples, std::uint64_t seed,
                                     unsigned threads) {
  require_positive(k, n);
  if (samples == 0) throw std::invalid_argument("volume_montecarlo requires samples >= 1");
  const std::size_t points = static_cast<std::size_t>(n * k + 1);
  const std::uint64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t b) {
    auto gen = block_generator(seed, b);
    std::vector<double> x(points);
    const std::uint64_t begin = b * kMonteCarloBlock;
    const std::uint64_t end = std::min(samples, begin + kMonteCarloBlock);
    std::uint64_t h = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      draw_sorted(gen, n, x);
      if (in_staircase_polytope(x, k, n)) ++h;
    }
    hits[b] = h;
  });
  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  est.generator = monte_carlo_generator_name();
  const double scale =
      Rational(power(n, static_cast<unsigned>(points)), factorial(static_cast<unsigned>(points)))
          .to_double();
  const double p = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.estimate = scale * p;
  est.std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

int raney_shift_count(std::span<const double> sorted, int k, int n) {
  std::vector<double> shifted(sorted.size());
  int count = 0;
  for (int m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      double y = sorted[i] + m;
      if (y >= n) y -= n;
      shifted[i] = y;
    }
    std::sort(shifted.begin(), shifted.end());
    if (in_staircase_polytope(shifted, k, n)) ++count;
  }
  return count;
}

bool raney_shift_check(int k, int n, std::uint64_t samples, std::uint64_t seed) {
  require_positive(k, n);
  if (samples == 0) throw std::invalid_argument("raney_shift_check requires samples >= 1");
  auto gen = block_generator(seed, 0);
  std::vector<double> x(static_cast<std::size_t>(n * k + 1));
  for (std::uint64_t s = 0; s < samples; ++s) {
    draw_sorted(gen, n, x);
    if (raney_shift_count(x, k, n) != 1) return false;
  }
  return true;
}

}  // namespace trimoments
