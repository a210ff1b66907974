#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trimoments/partition.hpp"
#include "trimoments/rational.hpp"

namespace trimoments {

/// Raised when a request exceeds the configured enumeration bound on nk.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kDefaultMaxNk = 8;

/// top! / prod(parts!). Throws std::invalid_argument unless parts sum to top.
BigInt multinomial(unsigned top, std::span<const unsigned> parts);
BigInt multinomial(unsigned top, std::initializer_list<unsigned> parts);

/// One displayed sum of a multinomial identity: its weight, its weighted
/// value and the number of index tuples it ranges over.
struct IdentitySum {
  BigInt weight;
  BigInt value;  ///< weight already applied
  std::size_t terms = 0;
};

struct IdentityEvaluation {
  int n = 0;
  int k = 0;
  std::vector<IdentitySum> sums;
  BigInt total() const;
};

/// Literal evaluation of the right-hand side of the multinomial identity for
/// n in {2, 3, 4}: every displayed sum over nonnegative index tuples, empty
/// sums contributing zero.
IdentityEvaluation identity_rhs_detailed(int n, int k);
BigInt identity_rhs(int n, int k);

/// n^{nk}
BigInt identity_lhs(int n, int k);

/// (n^{nk}, (nk+1)! * phi[(T^k T*^k)^n]) via the partition sum. The second
/// component is kept rational so a failing identity is never rounded into
/// agreement. Throws BoundError when nk > max_nk.
std::pair<BigInt, Rational> identity_from_moments(int n, int k, int max_nk = kDefaultMaxNk,
                                                unsigned threads = 1);

/// phi(kappa_pi) for every admissible partition of (T^k T*^k)^n, in
/// enumeration order. Throws BoundError when nk > max_nk.
std::vector<std::pair<PairPartition, Rational>> partition_terms(int n, int k,
                                                                int max_nk = kDefaultMaxNk);

/// Number of index tuples in the four partition shape families for n = 3:
/// (k+1) tuples with p+q = k plus three families over p+q+r = k-1.
std::size_t shape_family_count_n3(int k);

}  // namespace trimoments
