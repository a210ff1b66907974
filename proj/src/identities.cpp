#include "trimoments/identities.hpp"

#include <numeric>
#include <stdexcept>

#include "trimoments/kappa.hpp"
#include "trimoments/moments.hpp"

namespace trimoments {

BigInt multinomial(unsigned top, std::span<const unsigned> parts) {
  const unsigned sum = std::accumulate(parts.begin(), parts.end(), 0U);
  if (sum != top) {
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(top));
  }
  BigInt r = factorial(top);
  for (unsigned p : parts) r /= factorial(p);
  return r;
}

BigInt multinomial(unsigned top, std::initializer_list<unsigned> parts) {
  return multinomial(top, std::span<const unsigned>(parts.begin(), parts.size()));
}

BigInt IdentityEvaluation::total() const {
  BigInt t = 0;
  for (const auto& s : sums) t += s.value;
  return t;
}

namespace {

using U = unsigned;

BigInt central(U a) { return binomial(2 * a, a); }

// sum_{p+q=k} M(n p; p,...,p) M(n q; q,...,q)
IdentitySum diagonal_sum(U n, U k) {
  IdentitySum s{1, 0, 0};
  auto block = [n](U p) {
    std::vector<U> parts(n, p);
    return multinomial(n * p, parts);
  };
  for (U p = 0; p <= k; ++p) {
    s.value += block(p) * block(k - p);
    ++s.terms;
  }
  return s;
}

IdentityEvaluation identity_n2(U k) { return {2, static_cast<int>(k), {diagonal_sum(2, k)}}; }

IdentityEvaluation identity_n3(U k) {
  IdentityEvaluation e{3, static_cast<int>(k), {diagonal_sum(3, k)}};
  // 3 * sum over p+q+r = k-1, r'+q' = r+q+1, p''+r'' = p+r+1.
  IdentitySum s{3, 0, 0};
  for (U p = 0; p + 1 <= k; ++p) {
    for (U q = 0; p + q + 1 <= k; ++q) {
      const U r = k - 1 - p - q;
      for (U q1 = 0; q1 <= r + q + 1; ++q1) {
        const U r1 = r + q + 1 - q1;
        for (U p2 = 0; p2 <= p + r + 1; ++p2) {
          const U r2 = p + r + 1 - p2;
          s.value += multinomial(2 * p + p2, {p, p, p2}) * multinomial(2 * q + q1, {q, q, q1}) *
                     multinomial(r + r1 + r2, {r, r1, r2});
          ++s.terms;
        }
      }
    }
  }
  s.value *= s.weight;
  e.sums.push_back(s);
  return e;
}

IdentityEvaluation identity_n4(U k) {
  IdentityEvaluation e{4, static_cast<int>(k), {diagonal_sum(4, k)}};

  // 8 * sum over p+q+r = k-1, p'+q' = p+q+1, p''+q'' = p+q+1, q'''+r''' = q+r+1.
  IdentitySum second{8, 0, 0};
  for (U p = 0; p + 1 <= k; ++p) {
    for (U q = 0; p + q + 1 <= k; ++q) {
      const U r = k - 1 - p - q;
      for (U p1 = 0; p1 <= p + q + 1; ++p1) {
        const U q1 = p + q + 1 - p1;
        for (U p2 = 0; p2 <= p + q + 1; ++p2) {
          const U q2 = p + q + 1 - p2;
          for (U q3 = 0; q3 <= q + r + 1; ++q3) {
            const U r3 = q + r + 1 - q3;
            second.value += multinomial(2 * p + p1 + p2, {p, p, p1, p2}) *
                            multinomial(q + q1 + q2 + q3, {q, q1, q2, q3}) *
                            multinomial(3 * r + r3, {r, r, r, r3});
            ++second.terms;
          }
        }
      }
    }
  }
  second.value *= second.weight;
  e.sums.push_back(second);

  // 4 * sum over p+q'+r' = k-1 and p+q''+r'' = k-1 (shared p),
  // p'''+q''' = p+q'+1, p''''+q'''' = p+q''+1.
  IdentitySum third{4, 0, 0};
  for (U p = 0; p + 1 <= k; ++p) {
    for (U q1 = 0; p + q1 + 1 <= k; ++q1) {
      const U r1 = k - 1 - p - q1;
      for (U q2 = 0; p + q2 + 1 <= k; ++q2) {
        const U r2 = k - 1 - p - q2;
        for (U p3 = 0; p3 <= p + q1 + 1; ++p3) {
          const U q3 = p + q1 + 1 - p3;
          for (U p4 = 0; p4 <= p + q2 + 1; ++p4) {
            const U q4 = p + q2 + 1 - p4;
            third.value += multinomial(2 * p + p3 + p4, {p, p, p3, p4}) *
                           binomial(q1 + q3, q1) * binomial(q2 + q4, q2) * central(r2) *
                           central(r1) *
                           multinomial(q1 + q2 + q3 + q4 + 2 * r1 + 2 * r2 + 2,
                                       {q1 + q3 + 2 * r1 + 1, q2 + q4 + 2 * r2 + 1});
            ++third.terms;
          }
        }
      }
    }
  }
  third.value *= third.weight;
  e.sums.push_back(third);

  // 8 * sum over p+q+r+s = k-2, q'+r' = q+r+s+2, p''+r'' = p+q+r+2.
  IdentitySum fourth{8, 0, 0};
  for (U p = 0; p + 2 <= k; ++p) {
    for (U q = 0; p + q + 2 <= k; ++q) {
      for (U r = 0; p + q + r + 2 <= k; ++r) {
        const U s = k - 2 - p - q - r;
        for (U q1 = 0; q1 <= q + r + s + 2; ++q1) {
          const U r1 = q + r + s + 2 - q1;
          for (U p2 = 0; p2 <= p + q + r + 2; ++p2) {
            const U r2 = p + q + r + 2 - p2;
            fourth.value += central(p) * binomial(q + q1, q) * binomial(r + r2, r) * central(s) *
                            multinomial(3 * p + p2 + 2 * q + q1 + 2,
                                        {2 * p + q + q1 + 1, p + q + 1, p2}) *
                            multinomial(2 * r + r1 + r2 + 3 * s + 2,
                                        {r + r2 + 2 * s + 1, r + s + 1, r1});
            ++fourth.terms;
          }
        }
      }
    }
  }
  fourth.value *= fourth.weight;
  e.sums.push_back(fourth);
  return e;
}

void check_bound(int n, int k, int max_nk) {
  if (n * k > max_nk) {
    throw BoundError("nk = " + std::to_string(n * k) + " exceeds the enumeration bound " +
                     std::to_string(max_nk) + " (raise it with --max-nk)");
  }
}

}  // namespace

IdentityEvaluation identity_rhs_detailed(int n, int k) {
  if (k < 1) throw std::invalid_argument("identity_rhs requires k >= 1");
  switch (n) {
    case 2:
      return identity_n2(static_cast<U>(k));
    case 3:
      return identity_n3(static_cast<U>(k));
    case 4:
      return identity_n4(static_cast<U>(k));
    default:
      throw std::invalid_argument("no displayed identity for n = " + std::to_string(n) +
                                  "; use identity_from_moments");
  }
}

BigInt identity_rhs(int n, int k) { return identity_rhs_detailed(n, k).total(); }

BigInt identity_lhs(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("identity_lhs requires n, k >= 1");
  return power(n, static_cast<unsigned>(n * k));
}

std::pair<BigInt, Rational> identity_from_moments(int n, int k, int max_nk, unsigned threads) {
  check_bound(n, k, max_nk);
  return {identity_lhs(n, k), Rational(factorial(static_cast<unsigned>(n * k + 1))) *
                                  phi_word(power_word(k, n), threads)};
}

std::vector<std::pair<PairPartition, Rational>> partition_terms(int n, int k, int max_nk) {
  check_bound(n, k, max_nk);
  const Word w = power_word(k, n);
  std::vector<std::pair<PairPartition, Rational>> out;
  for (auto& p : admissible_partitions(w)) {
    Rational value = definite_integral_01(kappa_nested(p, w));
    out.emplace_back(std::move(p), std::move(value));
  }
  return out;
}

std::size_t shape_family_count_n3(int k) {
  if (k < 1) throw std::invalid_argument("shape_family_count_n3 requires k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  // p+q = k has k+1 solutions; p+q+r = k-1 has C(k+1, 2).
  return (kk + 1) + 3 * (kk * (kk + 1) / 2);
}

}  // namespace trimoments
