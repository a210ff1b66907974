#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "trimoments/partition.hpp"
#include "trimoments/word.hpp"

using namespace trimoments;

namespace {

std::vector<std::pair<int, int>> lines(const PairPartition& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : p.pairs()) out.emplace_back(a, b);
  return out;
}

PairPartition pp(std::vector<Pair> pairs) { return PairPartition::from_pairs(std::move(pairs)); }

}  // namespace

TEST_CASE("word parsing") {
  CHECK(Word::parse("T T*") == Word{Letter::T, Letter::TStar});
  CHECK(Word::parse("tt*T") == Word{Letter::T, Letter::TStar, Letter::T});
  CHECK(Word::parse("  T  \t T *") == Word{Letter::T, Letter::TStar});
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("*T"), ParseError);
  CHECK_THROWS_AS(Word::parse("T**"), ParseError);
  CHECK_THROWS_AS(Word::parse("TX"), ParseError);
  CHECK(Word::parse("T T* T").str() == "T T* T");
  CHECK(Word{}.str() == "1");
}

TEST_CASE("partial sums") {
  const Word w = Word::parse("T T T* T* T*");
  CHECK(w.sign(1) == 1);
  CHECK(w.sign(5) == -1);
  CHECK(w.partial_sum(0) == 0);
  CHECK(w.partial_sum(2) == 2);
  CHECK(w.total_sum() == -1);
  CHECK_FALSE(w.balanced());
  CHECK(Word::from_signs({1, -1, -1, 1}) == Word::parse("T T* T* T"));
  CHECK_THROWS_AS(Word::from_signs({1, 0}), std::invalid_argument);
  CHECK(Word::from_bits(3, 0b110) == Word::parse("T T* T*"));
  CHECK(alternating_blocks({2, 1, 0, 1}) == Word::parse("T T T* T*"));
}

TEST_CASE("enumerate_nc2 examples") {
  const auto two = enumerate_nc2(2);
  REQUIRE(two.size() == 2);
  std::set<std::string> rendered;
  for (const auto& p : two) rendered.insert(p.str());
  CHECK(rendered == std::set<std::string>{"{(1,2),(3,4)}", "{(1,4),(2,3)}"});
  CHECK(enumerate_nc2(0).size() == 1);
  CHECK(enumerate_nc2(0).front().empty());
  CHECK(enumerate_nc2(5).size() == 42);
}

TEST_CASE("enumerate_nc2 against Catalan and the crossing scan") {
  for (int m = 0; m <= 10; ++m) {
    const auto all = enumerate_nc2(m);
    CHECK(all.size() == oracle::catalan(m));
    std::set<std::string> distinct;
    for (const auto& p : all) {
      CHECK_FALSE(oracle::crossing(lines(p)));
      CHECK(p.points() == 2 * m);
      distinct.insert(p.str());
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("from_pairs validation") {
  CHECK_THROWS_AS(pp({{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(pp({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(pp({{1, 2}, {4, 5}}), std::invalid_argument);
  CHECK(pp({{2, 3}, {1, 4}}).str() == "{(1,4),(2,3)}");
  CHECK(pp({{1, 4}, {2, 3}}).partner(3) == 2);
  CHECK(is_noncrossing({{1, 4}, {2, 3}}));
  CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}));
}

TEST_CASE("admissible partitions") {
  CHECK(admissible_partitions(Word::parse("T T* T T*")).size() == 2);
  const auto one = admissible_partitions(Word::parse("T T T* T*"));
  REQUIRE(one.size() == 1);
  CHECK(one.front().str() == "{(1,4),(2,3)}");
  CHECK(admissible_partitions(Word::parse("T T T T")).empty());
  CHECK(admissible_partitions(Word::parse("T T* T")).empty());
}

TEST_CASE("property: admissible partitions are the opposite-sign filter") {
  for (unsigned length = 0; length <= 10; length += 2) {
    const auto all = enumerate_nc2(static_cast<int>(length / 2));
    for (std::uint64_t bits = 0; bits < (1ULL << length); ++bits) {
      const Word w = Word::from_bits(length, bits);
      std::size_t expected = 0;
      for (const auto& p : all) {
        bool ok = true;
        for (const auto& [a, b] : p.pairs()) ok = ok && w.sign(a) != w.sign(b);
        expected += ok;
      }
      const auto got = admissible_partitions(w);
      CHECK(got.size() == expected);
      if (!w.balanced()) CHECK(got.empty());
    }
  }
}

TEST_CASE("outer decomposition") {
  const auto p = pp({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 12}, {10, 11}});
  const auto d = outer_decomposition(p);
  CHECK(d.outer_indices == std::vector<int>{1, 7, 9, 13});
  CHECK(d.outer_lines() == std::vector<Pair>{{1, 6}, {7, 8}, {9, 12}});
  REQUIRE(d.inner.size() == 3);
  CHECK(d.inner[0].str() == "{(2,3),(4,5)}");
  CHECK(d.inner[1].empty());
  CHECK(d.inner[2].str() == "{(10,11)}");

  const auto single = outer_decomposition(pp({{1, 2}}));
  CHECK(single.outer_lines() == std::vector<Pair>{{1, 2}});
  CHECK(single.inner.front().empty());

  const auto nested = outer_decomposition(pp({{1, 4}, {2, 3}}));
  CHECK(nested.outer_lines() == std::vector<Pair>{{1, 4}});
  CHECK(nested.inner.front().str() == "{(2,3)}");

  CHECK_THROWS_AS(outer_decomposition(PairPartition{}), std::invalid_argument);
}

TEST_CASE("property: reassembly inverts the outer decomposition") {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& p : enumerate_nc2(m)) {
      const auto d = outer_decomposition(p);
      CHECK(d.outer_indices.front() == 1);
      CHECK(d.outer_indices.back() == 2 * m + 1);
      CHECK(reassemble(d) == p);
    }
  }
}
