#pragma once

#include <cstddef>
#include <vector>

#include "dctc/ctc/solver.hpp"

namespace dctc::analysis {

/// The decoder's slowest transient for n = 3 decays by ~0.955 per iteration,
/// so a residual of 1e-10 still leaves ~2e-9 of probability on wrong values.
/// Decoding therefore solves an order of magnitude past that by default.
inline constexpr double kDecodeTolerance = 1e-12;
inline constexpr std::size_t kDecodeMaxIterations = 100000;
inline constexpr std::size_t kMaxDecodeWidth = 4;

struct DecodeOptions {
  double tol = kDecodeTolerance;
  std::size_t max_iters = kDecodeMaxIterations;
  ctc::InitSpec init = ctc::InitSpec::mixed();
};

struct DecodeResult {
  std::size_t n = 0;
  std::size_t k = 0;
  /// Probability of each CR value, indexed by value.
  std::vector<double> distribution;
  std::size_t decoded = 0;
  double success_prob = 0.0;
  ctc::FixedPointResult fixed_point;
};

/// Encodes psi_k, solves the decoder's CTC fixed point by plain iteration and
/// reads out the CR register. Non-convergence is reported through
/// fixed_point.converged, with the distribution of the last iterate.
DecodeResult decode_experiment(std::size_t n, std::size_t k, const DecodeOptions& options = {});

/// Row t holds the CTC diagonal after t channel applications (row 0 is the
/// initial state), so the table has iters + 1 rows.
std::vector<std::vector<double>> convergence_trace(std::size_t n, std::size_t k, std::size_t iters,
                                                   const ctc::InitSpec& init = ctc::InitSpec::plus());

/// I(K;J) in bits for K uniform over 2^n values and p(j|k) from the decode
/// distributions.
double mutual_information(std::size_t n, const DecodeOptions& options = {});
double mutual_information(const std::vector<DecodeResult>& decodes);

}  // namespace dctc::analysis
