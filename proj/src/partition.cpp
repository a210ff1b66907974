#include "trimoments/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace trimoments {

class Nc2Builder {
 public:
  static PairPartition make(std::vector<Pair> pairs, int first_index) {
    return PairPartition(std::move(pairs), first_index);
  }

  // All NC2 partitions of {0, ..., 2m - 1}, lines unsorted.
  static const std::vector<std::vector<Pair>>& shapes(int m) {
    static std::map<int, std::vector<std::vector<Pair>>> cache;
    static std::recursive_mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Pair>> out;
    if (m == 0) {
      out.emplace_back();
    } else {
      for (int j = 1; j <= m; ++j) {
        // index 0 pairs with index 2j - 1; (j - 1) lines inside, (m - j) after.
        const auto& inside = shapes(j - 1);
        const auto& after = shapes(m - j);
        for (const auto& in : inside) {
          for (const auto& af : after) {
            std::vector<Pair> lines;
            lines.reserve(static_cast<std::size_t>(m));
            lines.push_back({0, 2 * j - 1});
            for (const auto& p : in) lines.push_back({p.first + 1, p.second + 1});
            for (const auto& p : af) lines.push_back({p.first + 2 * j, p.second + 2 * j});
            out.push_back(std::move(lines));
          }
        }
      }
    }
    return cache.emplace(m, std::move(out)).first->second;
  }
};

PairPartition::PairPartition(std::vector<Pair> pairs, int first_index)
    : pairs_(std::move(pairs)), first_index_(first_index) {
  std::sort(pairs_.begin(), pairs_.end());
}

PairPartition PairPartition::from_pairs(std::vector<Pair> pairs, int first_index) {
  const int n = 2 * static_cast<int>(pairs.size());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
    for (int idx : {p.first, p.second}) {
      const int off = idx - first_index;
      if (off < 0 || off >= n) {
        throw std::invalid_argument("pair index " + std::to_string(idx) + " out of range");
      }
      if (seen[static_cast<std::size_t>(off)]++) {
        throw std::invalid_argument("index " + std::to_string(idx) + " covered twice");
      }
    }
  }
  if (!is_noncrossing(pairs)) {
    throw std::invalid_argument("pair partition is crossing");
  }
  return PairPartition(std::move(pairs), first_index);
}

int PairPartition::partner(int i) const {
  for (const auto& p : pairs_) {
    if (p.first == i) return p.second;
    if (p.second == i) return p.first;
  }
  throw std::out_of_range("index " + std::to_string(i) + " not covered by partition");
}

std::string PairPartition::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ",";
    os << "(" << pairs_[i].first << "," << pairs_[i].second << ")";
  }
  os << "}";
  return os.str();
}

bool is_noncrossing(const std::vector<Pair>& pairs) {
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      if (x.first < y.first && y.first < x.second && x.second < y.second) return false;
    }
  }
  return true;
}

std::vector<PairPartition> enumerate_nc2(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_nc2: negative size");
  std::vector<PairPartition> out;
  const auto& shapes = Nc2Builder::shapes(m);
  out.reserve(shapes.size());
  for (const auto& s : shapes) {
    std::vector<Pair> lines = s;
    for (auto& p : lines) {
      p.first += 1;
      p.second += 1;
    }
    out.push_back(Nc2Builder::make(std::move(lines), 1));
  }
  return out;
}

std::vector<PairPartition> admissible_partitions(const Word& w) {
  std::vector<PairPartition> out;
  if (w.size() % 2 != 0) return out;
  for (auto& p : enumerate_nc2(static_cast<int>(w.size() / 2))) {
    const bool ok = std::all_of(p.pairs().begin(), p.pairs().end(), [&](const Pair& line) {
      return w.sign(static_cast<std::size_t>(line.first)) !=
             w.sign(static_cast<std::size_t>(line.second));
    });
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pair> OuterDecomposition::outer_lines() const {
  std::vector<Pair> lines;
  for (std::size_t r = 0; r + 1 < outer_indices.size(); ++r) {
    lines.push_back({outer_indices[r], outer_indices[r + 1] - 1});
  }
  return lines;
}

OuterDecomposition outer_decomposition(const PairPartition& p) {
  if (p.empty()) throw std::invalid_argument("outer_decomposition of an empty partition");
  OuterDecomposition d;
  const int end = p.first_index() + p.points();
  int i = p.first_index();
  d.outer_indices.push_back(i);
  while (i < end) {
    const int j = p.partner(i);
    if (j < i) throw std::logic_error("outer line opens at its right endpoint");
    std::vector<Pair> inner;
    for (const auto& line : p.pairs()) {
      if (line.first > i && line.second < j) inner.push_back(line);
    }
    d.inner.push_back(Nc2Builder::make(std::move(inner), i + 1));
    i = j + 1;
    d.outer_indices.push_back(i);
  }
  return d;
}

PairPartition reassemble(const OuterDecomposition& d) {
  std::vector<Pair> lines = d.outer_lines();
  for (const auto& in : d.inner) {
    lines.insert(lines.end(), in.pairs().begin(), in.pairs().end());
  }
  const int first = d.outer_indices.empty() ? 1 : d.outer_indices.front();
  return PairPartition::from_pairs(std::move(lines), first);
}

}  // namespace trimoments
