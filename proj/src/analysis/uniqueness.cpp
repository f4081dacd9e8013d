#include "dctc/analysis/uniqueness.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "dctc/circuit/builders.hpp"
#include "dctc/circuit/simulate.hpp"

namespace dctc::analysis {

using std::numbers::pi;

namespace {

constexpr std::size_t kMaxUniquenessWidth = 5;

void require_index(std::size_t n, std::size_t v, const char* what) {
  if (n == 0 || n >= 63 || v >= (std::size_t{1} << n)) {
    throw std::out_of_range(std::string(what) + " outside [0, 2^n)");
  }
}

double theta_kj(std::size_t n, std::size_t k, std::size_t j) {
  return 2 * pi * (static_cast<double>(k) - static_cast<double>(j)) / std::ldexp(1.0, static_cast<int>(n));
}

std::string describe(const OverlapReport& r) {
  return "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + " j=" + std::to_string(r.j) +
         ": closed form " + std::to_string(r.closed_form) + " vs numeric " +
         std::to_string(r.numeric.real()) + (r.numeric.imag() < 0 ? "" : "+") +
         std::to_string(r.numeric.imag()) + "i";
}

}  // namespace

std::size_t popcount(std::size_t v) { return static_cast<std::size_t>(std::popcount(v)); }

double alpha(std::size_t n, std::size_t i) {
  if (n == 0 || n >= 63 || i == 0 || i >= (std::size_t{1} << n)) {
    throw std::out_of_range("alpha: index must satisfy 1 <= i < 2^n");
  }
  const double width = static_cast<double>(n);
  const double ones = static_cast<double>(popcount(i));
  if (i >= (std::size_t{1} << (n - 1))) return std::sin(pi / 2 * (1 + (ones - 1) / width));
  return std::cos(pi / 2 * (1 + ones / width));
}

double overlap_closed_form(std::size_t n, std::size_t k, std::size_t j) {
  require_index(n, k, "k");
  require_index(n, j, "j");
  if (j == k) return 1.0;
  const double scale = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n - 1)));
  return scale * std::sin(theta_kj(n, k, j) / 2) * alpha(n, j ^ k);
}

core::Complex numeric_overlap(const circuit::Circuit& decoder, std::size_t k, std::size_t j) {
  if (!decoder.layout() || decoder.layout()->m != 0) {
    throw std::invalid_argument("numeric_overlap: expected a decoder circuit");
  }
  const std::size_t n = decoder.layout()->n;
  require_index(n, k, "k");
  require_index(n, j, "j");
  const auto v_j = circuit::condition_on_cr(decoder, decoder.slice_gates(circuit::slice_names::kInteraction), j);
  const auto encoded = circuit::padded_input(circuit::psi_k(n, k), n);
  return circuit::apply_circuit(v_j, encoded)[k];
}

core::Complex numeric_overlap(std::size_t n, std::size_t k, std::size_t j) {
  return numeric_overlap(circuit::build_decoder(n), k, j);
}

std::vector<OverlapReport> evaluate_overlaps(std::size_t n) {
  if (n == 0 || n > kMaxUniquenessWidth) {
    throw std::out_of_range("uniqueness verification supports 1 <= n <= " +
                            std::to_string(kMaxUniquenessWidth));
  }
  const auto decoder = circuit::build_decoder(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<OverlapReport> out;
  out.reserve(dim * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      OverlapReport r;
      r.n = n;
      r.k = k;
      r.j = j;
      r.theta_kj = theta_kj(n, k, j);
      r.popcount = popcount(j ^ k);
      if (j != k) r.alpha = alpha(n, j ^ k);
      r.closed_form = overlap_closed_form(n, k, j);
      r.numeric = numeric_overlap(decoder, k, j);
      r.agree = std::abs(r.numeric - r.closed_form) <= kOverlapTolerance;
      out.push_back(r);
    }
  }
  return out;
}

UniquenessError::UniquenessError(const OverlapReport& failing, std::vector<OverlapReport> reports)
    : std::runtime_error("uniqueness check failed at " + describe(failing)),
      failing_(failing),
      reports_(std::move(reports)) {}

std::vector<OverlapReport> verify_uniqueness(std::size_t n) {
  auto reports = evaluate_overlaps(n);
  for (const auto& r : reports) {
    if (!r.agree || r.closed_form == 0.0) throw UniquenessError(r, reports);
  }
  return reports;
}

}  // namespace dctc::analysis
