#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "trimoments/partition.hpp"
#include "trimoments/poly.hpp"
#include "trimoments/word.hpp"

namespace trimoments {

/// The variance of the triangular operator:
///   kappa(T,  b T*) = integral of b over [x, 1]
///   kappa(T*, b T ) = integral of b over [0, x]
///   kappa(T,  b T ) = kappa(T*, b T*) = 0
Poly kappa2(Letter left, const Poly& b, Letter right);

/// Nested evaluation kappa_pi(T^{s_1}, ..., T^{s_L}): every line consumes the
/// product of the values of the lines directly nested inside it. Throws
/// std::invalid_argument when p does not partition {1, ..., |w|}.
Poly kappa_nested(const PairPartition& p, const Word& w);

/// E(w) as the sum of kappa_pi over noncrossing pair partitions. Zero for
/// odd length, 1 for the empty word. `threads` > 1 splits the partition sum.
Poly expectation_direct(const Word& w, unsigned threads = 1);

/// Memoized recursive conditional expectation,
///   E(w) = sum_j kappa(T^{s_1}, E(w[2..j-1]) T^{s_j}) E(w[j+1..]),
/// keyed on contiguous subwords. Not thread-safe; use one per thread.
class ExpectationCache {
 public:
  const Poly& expectation(const Word& w);
  std::size_t size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  std::unordered_map<std::string, Poly> memo_;
};

/// E(w) via the first-line recursion (fresh cache per call).
Poly expectation_recursive(const Word& w);

/// The splittings 1 = i_1 < i_2 < ... < i_{k+1} = L + 1 into even-length
/// blocks, in lexicographic order of the index tuple.
std::vector<std::vector<int>> outer_line_splittings(int length);

/// E(w) summed literally over outer-line splittings:
///   prod_r kappa(T^{s_{i_r}}, E(inner block) T^{s_{i_{r+1}-1}}).
/// Inner expectations come from `cache`.
Poly expectation_outer_lines(const Word& w, ExpectationCache& cache);

/// Swap T and T* letter by letter, preserving order.
Word alpha_word(const Word& w);

/// expectation_direct(alpha_word(w)) == reflect(expectation_direct(w)).
bool alpha_check(const Word& w);

}  // namespace trimoments
