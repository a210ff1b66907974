#include "trimoments/kappa.hpp"

#include <stdexcept>

#include "trimoments/parallel.hpp"

namespace trimoments {

Poly kappa2(Letter left, const Poly& b, Letter right) {
  if (left == right) return {};
  return left == Letter::T ? integral_to_one(b) : integral_from_zero(b);
}

Poly kappa_nested(const PairPartition& p, const Word& w) {
  const auto length = static_cast<int>(w.size());
  if (p.first_index() != 1 || p.points() != length) {
    throw std::invalid_argument("partition " + p.str() + " does not cover the word '" +
                                w.str() + "'");
  }
  std::vector<int> partner(static_cast<std::size_t>(length) + 1, 0);
  for (const auto& line : p.pairs()) {
    partner[static_cast<std::size_t>(line.first)] = line.second;
    partner[static_cast<std::size_t>(line.second)] = line.first;
  }
  // One running product per open bracket; frames[0] is the outermost level.
  std::vector<Poly> frames;
  frames.reserve(static_cast<std::size_t>(length) / 2 + 1);
  frames.push_back(Poly::one());
  for (int i = 1; i <= length; ++i) {
    const int j = partner[static_cast<std::size_t>(i)];
    if (j > i) {
      frames.push_back(Poly::one());
      continue;
    }
    Poly inner = std::move(frames.back());
    frames.pop_back();
    const Poly value =
        kappa2(w[static_cast<std::size_t>(j - 1)], inner, w[static_cast<std::size_t>(i - 1)]);
    if (value.is_zero()) return {};
    frames.back() *= value;
  }
  return frames.front();
}

Poly expectation_direct(const Word& w, unsigned threads) {
  if (w.size() % 2 != 0) return {};
  const auto partitions = admissible_partitions(w);
  threads = resolve_threads(threads);
  const std::size_t chunks = std::min<std::size_t>(threads, partitions.size());
  if (chunks <= 1) {
    Poly total;
    for (const auto& p : partitions) total += kappa_nested(p, w);
    return total;
  }
  std::vector<Poly> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    for (std::size_t i = c; i < partitions.size(); i += chunks) {
      partial[c] += kappa_nested(partitions[i], w);
    }
  });
  Poly total;
  for (const auto& p : partial) total += p;
  return total;
}

const Poly& ExpectationCache::expectation(const Word& w) {
  const std::string key = w.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Poly total;
  const std::size_t length = w.size();
  if (length == 0) {
    total = Poly::one();
  } else if (length % 2 == 0) {
    // The first letter pairs with position j (1-based, even).
    for (std::size_t j = 2; j <= length; j += 2) {
      if (w[0] == w[j - 1]) continue;
      const Poly inner = expectation(w.subword(1, j - 2));
      const Poly head = kappa2(w[0], inner, w[j - 1]);
      if (head.is_zero()) continue;
      const Poly& tail = expectation(w.subword(j, length - j));
      if (tail.is_zero()) continue;
      total += head * tail;
    }
  }
  return memo_.emplace(key, std::move(total)).first->second;
}

Poly expectation_recursive(const Word& w) {
  ExpectationCache cache;
  return cache.expectation(w);
}

namespace {

void splittings_from(int start, int end, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (start == end) {
    out.push_back(current);
    return;
  }
  for (int next = start + 2; next <= end; next += 2) {
    current.push_back(next);
    splittings_from(next, end, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> outer_line_splittings(int length) {
  std::vector<std::vector<int>> out;
  if (length < 0 || length % 2 != 0) return out;
  std::vector<int> current{1};
  splittings_from(1, length + 1, current, out);
  return out;
}

Poly expectation_outer_lines(const Word& w, ExpectationCache& cache) {
  Poly total;
  for (const auto& idx : outer_line_splittings(static_cast<int>(w.size()))) {
    Poly term = Poly::one();
    for (std::size_t r = 0; r + 1 < idx.size() && !term.is_zero(); ++r) {
      const auto open = static_cast<std::size_t>(idx[r]);
      const auto close = static_cast<std::size_t>(idx[r + 1] - 1);
      const Poly& inner = cache.expectation(w.subword(open, close - open - 1));
      term *= kappa2(w[open - 1], inner, w[close - 1]);
    }
    total += term;
  }
  return total;
}

Word alpha_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(flip(l));
  return Word(std::move(out));
}

bool alpha_check(const Word& w) {
  return expectation_direct(alpha_word(w)) == reflect(expectation_direct(w));
}

}  // namespace trimoments
