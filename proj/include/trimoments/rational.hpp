#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trimoments {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(to_bigint(value)) {}  // NOLINT(implicit)

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)

  /// Throws std::domain_error for a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  template <std::integral I>
  static BigInt to_bigint(I value) {
    if constexpr (std::is_signed_v<I>) {
      return BigInt(static_cast<long>(value));
    } else {
      return BigInt(static_cast<unsigned long>(value));
    }
  }

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n!
BigInt factorial(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// base^exponent
BigInt power(const BigInt& base, unsigned exponent);

/// Decimal rendering of a big integer.
std::string to_string(const BigInt& value);

}  // namespace trimoments
