#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trimoments {

/// A letter of a word: T carries sign +1, T* carries sign -1.
enum class Letter : std::int8_t { T = 1, TStar = -1 };

constexpr int sign_of(Letter l) { return static_cast<int>(l); }
constexpr Letter flip(Letter l) { return l == Letter::T ? Letter::TStar : Letter::T; }

/// Malformed word text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite product T^{s_1} ... T^{s_L} with s_i in {+1, -1}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Builds a word from signs (+1 for T, -1 for T*). Throws on other values.
  static Word from_signs(const std::vector<int>& signs);

  /// Parses tokens "T" and "T*" (case-insensitive, whitespace ignored).
  static Word parse(std::string_view text);

  /// The i-th word of length `length` in binary order; bit b set means
  /// position b is T*.
  static Word from_bits(unsigned length, std::uint64_t bits);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// 1-based sign s_i, matching the mathematical indexing.
  int sign(std::size_t i) const { return sign_of(letters_.at(i - 1)); }

  /// s_1 + ... + s_j.
  int partial_sum(std::size_t j) const;
  int total_sum() const { return partial_sum(size()); }
  bool balanced() const { return total_sum() == 0; }

  const std::vector<Letter>& letters() const { return letters_; }

  /// Letters [first, first + count), 0-based.
  Word subword(std::size_t first, std::size_t count) const;

  /// Concatenation.
  Word operator+(const Word& rhs) const;

  /// Compact key, one character per letter ('+' or '-').
  std::string key() const;

  /// "T T* T", or "1" for the empty word.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// T^a followed by (T*)^b followed by T^c ... : alternating blocks starting
/// with T. Empty blocks contribute nothing.
Word alternating_blocks(const std::vector<int>& exponents);

}  // namespace trimoments

template <>
struct std::hash<trimoments::Word> {
  std::size_t operator()(const trimoments::Word& w) const noexcept {
    return std::hash<std::string>{}(w.key());
  }
};
