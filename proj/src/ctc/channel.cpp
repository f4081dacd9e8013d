#include "dctc/ctc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dctc/circuit/simulate.hpp"

namespace dctc::ctc {

using core::Complex;
using core::ComplexMatrix;
using core::DensityMatrix;
using core::PureState;

namespace {

/// Full-register bit pattern of every value of a sub-register.
std::vector<std::size_t> register_patterns(std::size_t total_qubits,
                                           std::span<const std::size_t> wires) {
  std::vector<std::size_t> out(core::dimension_of(wires.size()));
  for (std::size_t v = 0; v < out.size(); ++v) {
    std::size_t full = 0;
    for (std::size_t b = 0; b < wires.size(); ++b) {
      if (v & (std::size_t{1} << (wires.size() - 1 - b))) {
        full |= std::size_t{1} << (total_qubits - 1 - wires[b]);
      }
    }
    out[v] = full;
  }
  return out;
}

constexpr double kPurityTolerance = 1e-10;

}  // namespace

void KrausOperator::add_column(std::size_t index, std::vector<Complex> column) {
  if (index >= dimension_ || column.size() != dimension_) {
    throw std::invalid_argument("KrausOperator: column does not fit the operator");
  }
  if (std::find(support_.begin(), support_.end(), index) != support_.end()) {
    throw std::invalid_argument("KrausOperator: column " + std::to_string(index) + " already set");
  }
  support_.push_back(index);
  columns_.push_back(std::move(column));
}

ComplexMatrix KrausOperator::dense() const {
  ComplexMatrix m(dimension_, dimension_);
  for (std::size_t s = 0; s < support_.size(); ++s) {
    for (std::size_t r = 0; r < dimension_; ++r) m(r, support_[s]) = columns_[s][r];
  }
  return m;
}

CtcChannel::CtcChannel(std::size_t ctc_qubits, std::vector<KrausOperator> kraus,
                       std::shared_ptr<const circuit::Circuit> source, PureState cr_input)
    : ctc_qubits_(ctc_qubits),
      kraus_(std::move(kraus)),
      source_(std::move(source)),
      cr_input_(std::move(cr_input)) {
  for (const auto& k : kraus_) {
    if (k.dimension() != dimension()) {
      throw std::invalid_argument("CtcChannel: Kraus operator dimension mismatch");
    }
  }
}

CtcChannel kraus_from(const circuit::Circuit& c, const PureState& cr_input) {
  if (!c.layout()) throw std::invalid_argument("kraus_from: circuit has no CR/CTC layout");
  const auto& layout = *c.layout();
  const std::size_t width = layout.width();
  if (c.qubit_count() != 2 * width) {
    throw std::invalid_argument("kraus_from: circuit has wires outside the CR and CTC registers");
  }
  if (cr_input.qubit_count() != width) {
    throw std::invalid_argument("kraus_from: CR input has " + std::to_string(cr_input.qubit_count()) +
                                " qubits, register has " + std::to_string(width));
  }

  const std::size_t total = c.qubit_count();
  const std::size_t dim = core::dimension_of(width);
  const auto cr_pat = register_patterns(total, layout.cr_wires);
  const auto ctc_pat = register_patterns(total, layout.ctc_wires);

  std::vector<KrausOperator> kraus(dim, KrausOperator(dim));
  std::vector<Complex> amps(core::dimension_of(total));
  std::vector<Complex> column(dim);
  // Column c of every K_i comes from one simulation of U(|in> (x) |c>).
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(amps.begin(), amps.end(), Complex{});
    for (std::size_t a = 0; a < dim; ++a) amps[cr_pat[a] | ctc_pat[col]] = cr_input[a];
    circuit::apply_gates_inplace(amps, total, c.gates());
    for (std::size_t i = 0; i < dim; ++i) {
      bool nonzero = false;
      for (std::size_t r = 0; r < dim; ++r) {
        column[r] = amps[cr_pat[i] | ctc_pat[r]];
        nonzero = nonzero || column[r] != Complex{};
      }
      if (nonzero) kraus[i].add_column(col, column);
    }
  }
  return CtcChannel(width, std::move(kraus), std::make_shared<const circuit::Circuit>(c), cr_input);
}

CtcChannel kraus_from(const circuit::Circuit& c, const DensityMatrix& cr_input) {
  const auto eig = core::hermitian_eigen(cr_input.matrix());
  const std::size_t top = eig.values.size() - 1;
  if (std::abs(eig.values[top] - 1.0) > kPurityTolerance) {
    throw std::invalid_argument("kraus_from: mixed CR inputs are not supported");
  }
  std::vector<Complex> amps(cr_input.dimension());
  for (std::size_t r = 0; r < amps.size(); ++r) amps[r] = eig.vectors(r, top);
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(norm);
  return kraus_from(c, PureState(cr_input.qubit_count(), std::move(amps)));
}

DensityMatrix apply_channel(const CtcChannel& ch, const DensityMatrix& omega) {
  const std::size_t dim = ch.dimension();
  if (omega.dimension() != dim) {
    throw std::invalid_argument("apply_channel: state dimension " + std::to_string(omega.dimension()) +
                                " does not match channel dimension " + std::to_string(dim));
  }
  ComplexMatrix out(dim, dim);
  std::vector<Complex> mixed;
  for (const auto& k : ch.kraus()) {
    const auto support = k.support();
    const std::size_t s = support.size();
    // mixed(:, b) = sum_a K(:, a) omega(a, b) over the support, then
    // out += mixed K^dagger restricted to the support.
    mixed.assign(dim * s, Complex{});
    for (std::size_t b = 0; b < s; ++b) {
      for (std::size_t a = 0; a < s; ++a) {
        const Complex w = omega(support[a], support[b]);
        if (w == Complex{}) continue;
        const auto col = k.column(a);
        for (std::size_t r = 0; r < dim; ++r) mixed[r * s + b] += col[r] * w;
      }
    }
    for (std::size_t b = 0; b < s; ++b) {
      const auto col = k.column(b);
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex m = mixed[r * s + b];
        if (m == Complex{}) continue;
        for (std::size_t c = 0; c < dim; ++c) out(r, c) += m * std::conj(col[c]);
      }
    }
  }
  return DensityMatrix(ch.ctc_qubits(), core::hermitize(std::move(out)));
}

ComplexMatrix kraus_completeness(const CtcChannel& ch) {
  ComplexMatrix sum(ch.dimension(), ch.dimension());
  for (const auto& k : ch.kraus()) {
    const auto support = k.support();
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = 0; b < support.size(); ++b) {
        Complex acc = 0.0;
        const auto ca = k.column(a);
        const auto cb = k.column(b);
        for (std::size_t r = 0; r < ca.size(); ++r) acc += std::conj(ca[r]) * cb[r];
        sum(support[a], support[b]) += acc;
      }
    }
  }
  return sum;
}

ComplexMatrix MeasurePrepareForm::prepare(std::span<const double> weights) const {
  if (weights.size() != dimension) throw std::invalid_argument("prepare: weight count mismatch");
  ComplexMatrix out(dimension, dimension);
  for (std::size_t c = 0; c < dimension; ++c) {
    if (weights[c] == 0.0) continue;
    for (const auto& v : preparations[c]) {
      for (std::size_t r = 0; r < dimension; ++r) {
        const Complex scaled = weights[c] * v[r];
        if (scaled == Complex{}) continue;
        for (std::size_t k = 0; k < dimension; ++k) out(r, k) += scaled * std::conj(v[k]);
      }
    }
  }
  return out;
}

std::optional<MeasurePrepareForm> measure_prepare_form(const CtcChannel& ch) {
  const std::size_t dim = ch.dimension();
  MeasurePrepareForm form;
  form.dimension = dim;
  form.preparations.resize(dim);
  form.transition.assign(dim * dim, 0.0);
  for (const auto& k : ch.kraus()) {
    if (k.support().size() > 1) return std::nullopt;
    if (k.support().empty()) continue;
    const std::size_t c = k.support()[0];
    const auto col = k.column(0);
    form.preparations[c].emplace_back(col.begin(), col.end());
    for (std::size_t r = 0; r < dim; ++r) form.transition[r * dim + c] += std::norm(col[r]);
  }
  return form;
}

}  // namespace dctc::ctc
