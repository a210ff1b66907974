#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trimoments/word.hpp"

namespace trimoments {

enum class EntryModel {
  /// Independent real and imaginary parts, each of variance 1/(2N).
  ComplexGaussian,
  /// Real entries of variance 1/N.
  RealGaussian,
};

std::string to_string(EntryModel model);

/// Upper-triangular N x N matrices with independent centered Gaussian
/// entries t_{ij}, i <= j, of second absolute moment 1/N.
struct MatrixEnsembleConfig {
  int dim = 300;
  int samples = 200;
  std::uint64_t seed = 1;
  EntryModel entry_model = EntryModel::ComplexGaussian;
  /// Worker threads for the sample loop (0 = hardware concurrency).
  unsigned threads = 1;
};

struct MomentEstimate {
  double mean = 0.0;       ///< mean of Re (1/N) Tr
  double std_error = 0.0;  ///< standard error of the mean
  double imag_mean = 0.0;  ///< mean of Im (1/N) Tr
  int samples = 0;
};

/// Monte Carlo estimate of E (1/N) Tr M_1 ... M_L with M_i = T_N for T and
/// T_N^dagger for T*. Sample i uses a generator seeded from (seed, i), so
/// estimates are reproducible and independent of the thread count. Throws
/// std::invalid_argument when dim < 1 or samples < 1.
MomentEstimate sample_moment(const Word& w, const MatrixEnsembleConfig& cfg);

/// Estimates for several words from the same draws; matrix products shared
/// between words are computed once per draw.
std::vector<MomentEstimate> sample_moments(std::span<const Word> words,
                                           const MatrixEnsembleConfig& cfg);

std::string random_matrix_generator_name();

}  // namespace trimoments
