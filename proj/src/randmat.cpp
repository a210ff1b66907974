#include "trimoments/randmat.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Dense>

#include "trimoments/parallel.hpp"

namespace trimoments {

namespace {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

Matrix draw_triangular(int dim, EntryModel model, std::mt19937_64& gen) {
  Matrix t = Matrix::Zero(dim, dim);
  const double n = static_cast<double>(dim);
  if (model == EntryModel::ComplexGaussian) {
    std::normal_distribution<double> normal(0.0, std::sqrt(1.0 / (2.0 * n)));
    for (int j = 0; j < dim; ++j) {
      for (int i = 0; i <= j; ++i) {
        const double re = normal(gen);
        const double im = normal(gen);
        t(i, j) = Complex(re, im);
      }
    }
  } else {
    std::normal_distribution<double> normal(0.0, std::sqrt(1.0 / n));
    for (int j = 0; j < dim; ++j) {
      for (int i = 0; i <= j; ++i) t(i, j) = normal(gen);
    }
  }
  return t;
}

// Products of subwords for one draw, memoized on the subword key.
class ProductCache {
 public:
  ProductCache(const Matrix& t) : t_(t), t_adj_(t.adjoint()) {}

  const Matrix& product(const Word& w) {
    const std::string key = w.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Matrix out;
    if (w.size() == 1) {
      out = w[0] == Letter::T ? t_ : t_adj_;
    } else {
      const Matrix& head = product(w.subword(0, w.size() - 1));
      if (w[w.size() - 1] == Letter::T) {
        out.noalias() = head * t_.triangularView<Eigen::Upper>();
      } else {
        out.noalias() = head * t_adj_.triangularView<Eigen::Lower>();
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  /// (1/N) Tr of the word product.
  Complex normalized_trace(const Word& w) {
    const double n = static_cast<double>(t_.rows());
    if (w.empty()) return 1.0;
    if (w.size() == 1) return product(w).trace() / n;
    const std::size_t half = w.size() / 2;
    const Matrix& a = product(w.subword(0, half));
    const Matrix& b = product(w.subword(half, w.size() - half));
    // Tr(AB) = sum_ij A_ij B_ji.
    return (a.array() * b.transpose().array()).sum() / n;
  }

 private:
  const Matrix& t_;
  Matrix t_adj_;
  std::unordered_map<std::string, Matrix> memo_;
};

std::mt19937_64 sample_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::string to_string(EntryModel model) {
  return model == EntryModel::ComplexGaussian ? "complex-gaussian" : "real-gaussian";
}

std::string random_matrix_generator_name() {
  return "mt19937_64 seeded by seed_seq(seed, sample); std::normal_distribution";
}

std::vector<MomentEstimate> sample_moments(std::span<const Word> words,
                                           const MatrixEnsembleConfig& cfg) {
  if (cfg.dim < 1) throw std::invalid_argument("random matrix dimension must be >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("random matrix samples must be >= 1");
  const auto samples = static_cast<std::size_t>(cfg.samples);
  std::vector<std::vector<Complex>> values(samples, std::vector<Complex>(words.size()));
  parallel_for(samples, cfg.threads, [&](std::size_t s) {
    auto gen = sample_generator(cfg.seed, s);
    const Matrix t = draw_triangular(cfg.dim, cfg.entry_model, gen);
    ProductCache cache(t);
    for (std::size_t i = 0; i < words.size(); ++i) values[s][i] = cache.normalized_trace(words[i]);
  });

  std::vector<MomentEstimate> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    double sum = 0.0;
    double imag = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      sum += values[s][i].real();
      imag += values[s][i].imag();
    }
    const double mean = sum / static_cast<double>(samples);
    double sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      const double d = values[s][i].real() - mean;
      sq += d * d;
    }
    auto& e = out[i];
    e.mean = mean;
    e.imag_mean = imag / static_cast<double>(samples);
    e.samples = cfg.samples;
    e.std_error = samples > 1 ? std::sqrt(sq / static_cast<double>(samples - 1) /
                                          static_cast<double>(samples))
                              : 0.0;
  }
  return out;
}

MomentEstimate sample_moment(const Word& w, const MatrixEnsembleConfig& cfg) {
  return sample_moments(std::span<const Word>(&w, 1), cfg).front();
}

}  // namespace trimoments
