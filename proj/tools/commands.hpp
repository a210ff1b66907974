#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "report.hpp"
#include "trimoments/identities.hpp"
#include "trimoments/word.hpp"

namespace trimoments::cli {

/// Word text with the shorthand of the command line: tokens T and T*,
/// powers X^k and parenthesized groups, e.g. "(T^2 T*^2)^3". Case and
/// whitespace are ignored. Throws ParseError.
Word parse_word_expression(std::string_view text);

struct Options {
  std::optional<std::string> word;
  std::optional<int> k;
  std::optional<int> n;
  int max_nk = kDefaultMaxNk;
  std::string method;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  int dim = 300;
  unsigned threads = 0;
  bool terms = false;
};

Report cmd_moment(const Options& opt);
Report cmd_verify(const Options& opt);
Report cmd_identity(const Options& opt);
Report cmd_volume(const Options& opt);
Report cmd_randmat(const Options& opt);
Report cmd_enumerate(const Options& opt);

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

}  // namespace trimoments::cli
