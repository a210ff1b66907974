#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trimoments/moments.hpp"
#include "trimoments/randmat.hpp"

using namespace trimoments;

namespace {

MatrixEnsembleConfig config(int dim, int samples, std::uint64_t seed = 1) {
  MatrixEnsembleConfig cfg;
  cfg.dim = dim;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("T T* has mean (N+1)/(2N) at every N") {
  for (EntryModel model : {EntryModel::ComplexGaussian, EntryModel::RealGaussian}) {
    auto cfg = config(60, 100, 5);
    cfg.entry_model = model;
    const auto est = sample_moment(Word::parse("T T*"), cfg);
    const double expected = 61.0 / 120.0;
    CHECK(est.std_error > 0);
    CHECK(std::abs(est.mean - expected) <= 4 * est.std_error);
    CHECK(std::abs(est.imag_mean) < 1e-12);
    CHECK(est.samples == 100);
  }
}

TEST_CASE("unbalanced and odd words estimate zero") {
  const auto cfg = config(80, 60, 2);
  for (const char* text : {"T T", "T", "T T T*", "T* T* T* T"}) {
    const auto est = sample_moment(Word::parse(text), cfg);
    CHECK(std::abs(est.mean) <= 4 * est.std_error + 1e-12);
  }
}

TEST_CASE("T T* T T* at N = 300") {
  const auto est = sample_moment(Word::parse("T T* T T*"), config(300, 400, 3));
  const double exact = 2.0 / 3.0;
  CHECK(std::abs(est.mean - exact) / exact < 0.10);
  CHECK(std::abs(est.mean - exact) <= 4 * est.std_error + 0.05);
}

TEST_CASE("reproducibility and shared products") {
  const std::vector<Word> words{Word::parse("T T*"), Word::parse("T* T T T*"),
                                Word::parse("T T* T* T")};
  auto cfg = config(40, 30, 11);
  const auto together = sample_moments(words, cfg);
  cfg.threads = 3;
  const auto threaded = sample_moments(words, cfg);
  REQUIRE(together.size() == 3);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto alone = sample_moment(words[i], config(40, 30, 11));
    CHECK(together[i].mean == alone.mean);
    CHECK(together[i].std_error == alone.std_error);
    CHECK(threaded[i].mean == alone.mean);
  }
  CHECK(sample_moment(words[0], config(40, 30, 12)).mean != together[0].mean);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(sample_moment(Word::parse("T T*"), config(0, 10)), std::invalid_argument);
  CHECK_THROWS_AS(sample_moment(Word::parse("T T*"), config(10, 0)), std::invalid_argument);
  CHECK(sample_moment(Word{}, config(5, 3)).mean == 1.0);
  CHECK(to_string(EntryModel::ComplexGaussian) == "complex-gaussian");
}
