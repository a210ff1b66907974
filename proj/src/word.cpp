#include "trimoments/word.hpp"

#include <cctype>
#include <ostream>

namespace trimoments {

Word Word::from_signs(const std::vector<int>& signs) {
  std::vector<Letter> letters;
  letters.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("word signs must be +1 or -1");
    }
    letters.push_back(s == 1 ? Letter::T : Letter::TStar);
  }
  return Word(std::move(letters));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'T' || c == 't') {
      letters.push_back(Letter::T);
      continue;
    }
    if (c == '*') {
      if (letters.empty() || letters.back() != Letter::T) {
        throw ParseError("'*' must directly follow a T at offset " + std::to_string(i));
      }
      letters.back() = Letter::TStar;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                     std::to_string(i));
  }
  return Word(std::move(letters));
}

Word Word::from_bits(unsigned length, std::uint64_t bits) {
  std::vector<Letter> letters(length);
  for (unsigned b = 0; b < length; ++b) {
    letters[b] = (bits >> b) & 1U ? Letter::TStar : Letter::T;
  }
  return Word(std::move(letters));
}

int Word::partial_sum(std::size_t j) const {
  int sum = 0;
  for (std::size_t i = 0; i < j && i < letters_.size(); ++i) {
    sum += sign_of(letters_[i]);
  }
  return sum;
}

Word Word::subword(std::size_t first, std::size_t count) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::string Word::key() const {
  std::string k(letters_.size(), '+');
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == Letter::TStar) k[i] = '-';
  }
  return k;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i] == Letter::T ? "T" : "T*";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word alternating_blocks(const std::vector<int>& exponents) {
  std::vector<Letter> letters;
  Letter current = Letter::T;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative block exponent");
    letters.insert(letters.end(), static_cast<std::size_t>(e), current);
    current = flip(current);
  }
  return Word(std::move(letters));
}

}  // namespace trimoments
