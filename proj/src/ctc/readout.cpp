#include "dctc/ctc/readout.hpp"

#include <algorithm>
#include <stdexcept>

#include "dctc/circuit/simulate.hpp"

namespace dctc::ctc {

using core::Complex;

std::vector<double> readout(const circuit::Circuit& c, const core::PureState& cr_input,
                            const core::DensityMatrix& sigma) {
  if (!c.layout()) throw std::invalid_argument("readout: circuit has no CR/CTC layout");
  const auto& layout = *c.layout();
  const std::size_t width = layout.width();
  if (cr_input.qubit_count() != width || sigma.qubit_count() != width ||
      c.qubit_count() != 2 * width) {
    throw std::invalid_argument("readout: dimension mismatch between circuit, input and sigma");
  }

  const std::size_t total = c.qubit_count();
  const std::size_t dim = core::dimension_of(width);
  auto pattern = [total](std::span<const std::size_t> wires, std::size_t v) {
    std::size_t full = 0;
    for (std::size_t b = 0; b < wires.size(); ++b) {
      if (v & (std::size_t{1} << (wires.size() - 1 - b))) full |= std::size_t{1} << (total - 1 - wires[b]);
    }
    return full;
  };
  std::vector<std::size_t> cr_pat(dim), ctc_pat(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    cr_pat[v] = pattern(layout.cr_wires, v);
    ctc_pat[v] = pattern(layout.ctc_wires, v);
  }

  const auto eig = core::hermitian_eigen(sigma.matrix());
  std::vector<double> probs(dim, 0.0);
  std::vector<Complex> amps(core::dimension_of(total));
  for (std::size_t e = 0; e < dim; ++e) {
    const double weight = eig.values[e];
    if (weight <= 0.0) continue;
    std::fill(amps.begin(), amps.end(), Complex{});
    for (std::size_t a = 0; a < dim; ++a) {
      if (cr_input[a] == Complex{}) continue;
      for (std::size_t b = 0; b < dim; ++b) amps[cr_pat[a] | ctc_pat[b]] = cr_input[a] * eig.vectors(b, e);
    }
    circuit::apply_gates_inplace(amps, total, c.gates());
    for (std::size_t i = 0; i < dim; ++i) {
      double p = 0.0;
      for (std::size_t j = 0; j < dim; ++j) p += std::norm(amps[cr_pat[i] | ctc_pat[j]]);
      probs[i] += weight * p;
    }
  }
  double total_p = 0.0;
  for (double p : probs) total_p += p;
  // Dropping the (tiny) negative eigenvalues leaves the sum a hair off 1.
  for (double& p : probs) p /= total_p;
  return probs;
}

}  // namespace dctc::ctc
