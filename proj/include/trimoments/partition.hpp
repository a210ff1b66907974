#pragma once

#include <string>
#include <vector>

#include "trimoments/word.hpp"

namespace trimoments {

/// One line {first, second} of a pair partition, first < second.
struct Pair {
  int first;
  int second;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A noncrossing pair partition of the contiguous index range
/// {first_index, ..., first_index + 2m - 1}. Lines are kept sorted by their
/// smaller endpoint.
class PairPartition {
 public:
  PairPartition() = default;

  /// Validates coverage and the noncrossing condition; throws
  /// std::invalid_argument on failure.
  static PairPartition from_pairs(std::vector<Pair> pairs, int first_index = 1);

  const std::vector<Pair>& pairs() const { return pairs_; }
  int first_index() const { return first_index_; }
  /// Number of points covered (2m).
  int points() const { return 2 * static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }

  /// Partner of index i (absolute indexing). Throws if i is not covered.
  int partner(int i) const;

  /// "{(1,4),(2,3)}".
  std::string str() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  friend class Nc2Builder;
  PairPartition(std::vector<Pair> pairs, int first_index);

  std::vector<Pair> pairs_;
  int first_index_ = 1;
};

/// True when no two lines {a,c}, {b,d} satisfy a < b < c < d.
bool is_noncrossing(const std::vector<Pair>& pairs);

/// All noncrossing pair partitions of {1, ..., 2m}; Catalan(m) of them.
/// Order: index 1 is paired with 2, then 4, ... and the enclosed and
/// trailing ranges are enumerated recursively in the same order.
std::vector<PairPartition> enumerate_nc2(int m);

/// The partitions from enumerate_nc2 whose every line joins T with T*.
/// Empty for odd-length words.
std::vector<PairPartition> admissible_partitions(const Word& w);

/// Outer lines {i_r, i_{r+1} - 1} and the partitions nested under each.
struct OuterDecomposition {
  /// 1 = i_1 < i_2 < ... < i_{k+1} = 2m + 1 (for a partition starting at 1).
  std::vector<int> outer_indices;
  /// inner[r] partitions the range (i_r, i_{r+1} - 1) exclusive.
  std::vector<PairPartition> inner;

  std::vector<Pair> outer_lines() const;
};

/// Throws std::invalid_argument for an empty partition.
OuterDecomposition outer_decomposition(const PairPartition& p);

/// Inverse of outer_decomposition.
PairPartition reassemble(const OuterDecomposition& d);

}  // namespace trimoments
