#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/matrix.hpp"

namespace dctc::analysis {

/// Agreement required between the closed form and the matrix computation.
inline constexpr double kOverlapTolerance = 1e-10;

std::size_t popcount(std::size_t v);

/// Coefficient of |i>_CTC after W T R_j acts on the encoded register
/// (up to the common 2^{-(n-1)/2} sin(theta_kj / 2) factor):
///   sin(pi/2 (1 + (o(i) - 1)/n))  if i >= 2^{n-1}
///   cos(pi/2 (1 + o(i)/n))        otherwise,
/// with o the popcount. Defined for 1 <= i < 2^n; for n = 1 it is 1.
double alpha(std::size_t n, std::size_t i);

/// <k|V_j|Psi_k> predicted analytically: 1 for j == k, otherwise
/// 2^{-(n-1)/2} sin(theta_kj / 2) alpha_{j xor k}, theta_kj = 2 pi (k - j) / 2^n.
double overlap_closed_form(std::size_t n, std::size_t k, std::size_t j);

/// <k|V_j|Psi_k> from the decoder's gates with the CR register frozen to |j>.
core::Complex numeric_overlap(std::size_t n, std::size_t k, std::size_t j);
/// Same, reusing an already built decoder.
core::Complex numeric_overlap(const circuit::Circuit& decoder, std::size_t k, std::size_t j);

struct OverlapReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t j = 0;
  double theta_kj = 0.0;
  std::size_t popcount = 0;  // o(j xor k)
  /// alpha_{j xor k}; unset when j == k (alpha_0 is undefined).
  std::optional<double> alpha;
  double closed_form = 0.0;
  core::Complex numeric;
  bool agree = false;
};

/// All 4^n reports; never throws on disagreement.
std::vector<OverlapReport> evaluate_overlaps(std::size_t n);

class UniquenessError : public std::runtime_error {
 public:
  UniquenessError(const OverlapReport& failing, std::vector<OverlapReport> reports);
  const OverlapReport& failing() const { return failing_; }
  const std::vector<OverlapReport>& reports() const { return reports_; }

 private:
  OverlapReport failing_;
  std::vector<OverlapReport> reports_;
};

/// evaluate_overlaps(n), throwing UniquenessError if any pair disagrees by
/// more than kOverlapTolerance or has a vanishing closed form. n in 1..5.
std::vector<OverlapReport> verify_uniqueness(std::size_t n);

}  // namespace dctc::analysis
