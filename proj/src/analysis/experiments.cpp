#include "dctc/analysis/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dctc/circuit/builders.hpp"
#include "dctc/ctc/readout.hpp"

namespace dctc::analysis {

namespace {

void require_decode_args(std::size_t n, std::size_t k) {
  if (n == 0 || n > kMaxDecodeWidth) {
    throw std::out_of_range("decode supports 1 <= n <= " + std::to_string(kMaxDecodeWidth));
  }
  if (k >= core::dimension_of(n)) throw std::out_of_range("k must be below 2^n");
}

}  // namespace

DecodeResult decode_experiment(std::size_t n, std::size_t k, const DecodeOptions& options) {
  require_decode_args(n, k);
  const auto decoder = circuit::build_decoder(n);
  const auto input = circuit::padded_input(circuit::psi_k(n, k), n);
  const auto channel = ctc::kraus_from(decoder, input);
  if (options.init.kind == ctc::InitSpec::Kind::kBasis && options.init.index >= channel.dimension()) {
    throw std::out_of_range("initial basis index outside the CTC register");
  }

  auto fixed_point = ctc::solve_fixed_point(channel, ctc::make_initial_state(options.init, n),
                                            options.tol, options.max_iters);
  auto distribution = ctc::readout(decoder, input, fixed_point.sigma);
  const auto decoded = static_cast<std::size_t>(
      std::max_element(distribution.begin(), distribution.end()) - distribution.begin());
  const double success = distribution[k];
  DecodeResult out{n, k, std::move(distribution), decoded, success, std::move(fixed_point)};
  return out;
}

std::vector<std::vector<double>> convergence_trace(std::size_t n, std::size_t k, std::size_t iters,
                                                   const ctc::InitSpec& init) {
  require_decode_args(n, k);
  if (iters == 0) throw std::invalid_argument("convergence trace needs at least one iteration");
  const auto channel = ctc::kraus_from(circuit::build_decoder(n), circuit::padded_input(circuit::psi_k(n, k), n));
  if (init.kind == ctc::InitSpec::Kind::kBasis && init.index >= channel.dimension()) {
    throw std::out_of_range("initial basis index outside the CTC register");
  }

  auto omega = ctc::make_initial_state(init, n);
  std::vector<std::vector<double>> rows;
  rows.reserve(iters + 1);
  rows.push_back(omega.diagonal());
  for (std::size_t t = 0; t < iters; ++t) {
    omega = ctc::apply_channel(channel, omega);
    rows.push_back(omega.diagonal());
  }
  return rows;
}

double mutual_information(const std::vector<DecodeResult>& decodes) {
  if (decodes.empty()) throw std::invalid_argument("mutual information needs decode results");
  const std::size_t values = decodes.front().distribution.size();
  if (decodes.size() != values) {
    throw std::invalid_argument("mutual information needs one decode per register value");
  }
  const double pk = 1.0 / static_cast<double>(values);
  std::vector<double> pj(values, 0.0);
  for (const auto& d : decodes) {
    if (d.distribution.size() != values) throw std::invalid_argument("decode distributions differ in size");
    for (std::size_t j = 0; j < values; ++j) pj[j] += pk * d.distribution[j];
  }
  double info = 0.0;
  for (const auto& d : decodes) {
    for (std::size_t j = 0; j < values; ++j) {
      const double p = d.distribution[j];
      if (p > 0.0) info += pk * p * std::log2(p / pj[j]);
    }
  }
  return info;
}

double mutual_information(std::size_t n, const DecodeOptions& options) {
  require_decode_args(n, 0);
  std::vector<DecodeResult> decodes;
  for (std::size_t k = 0; k < core::dimension_of(n); ++k) decodes.push_back(decode_experiment(n, k, options));
  return mutual_information(decodes);
}

}  // namespace dctc::analysis
