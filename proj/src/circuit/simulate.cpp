#include "dctc/circuit/simulate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dctc::circuit {

using core::Complex;
using core::ComplexMatrix;
using core::DensityMatrix;
using core::PureState;

namespace {

void check_width(std::size_t circuit_qubits, std::size_t state_qubits) {
  if (circuit_qubits != state_qubits) {
    throw std::invalid_argument("circuit acts on " + std::to_string(circuit_qubits) +
                                " qubits but the state has " + std::to_string(state_qubits));
  }
  if (state_qubits > core::kMaxQubits) {
    throw std::invalid_argument("register exceeds the simulator limit");
  }
}

}  // namespace

PureState apply_gate(const PureState& psi, const Gate& gate) {
  return core::apply_operator(psi, gate.wires(), gate.matrix());
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  return core::apply_operator(rho, gate.wires(), gate.matrix());
}

void apply_gates_inplace(std::span<Complex> amplitudes, std::size_t qubit_count,
                         std::span<const Gate> gates) {
  for (const auto& g : gates) core::apply_local_operator(amplitudes, qubit_count, g.wires(), g.matrix());
}

PureState apply_gates(const PureState& psi, std::span<const Gate> gates) {
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  apply_gates_inplace(amps, psi.qubit_count(), gates);
  return PureState(psi.qubit_count(), std::move(amps));
}

DensityMatrix apply_gates(const DensityMatrix& rho, std::span<const Gate> gates) {
  DensityMatrix out = rho;
  for (const auto& g : gates) out = apply_gate(out, g);
  return out;
}

PureState apply_circuit(const Circuit& c, const PureState& psi) {
  check_width(c.qubit_count(), psi.qubit_count());
  return apply_gates(psi, c.gates());
}

DensityMatrix apply_circuit(const Circuit& c, const DensityMatrix& rho) {
  check_width(c.qubit_count(), rho.qubit_count());
  return apply_gates(rho, c.gates());
}

ComplexMatrix gates_unitary(std::size_t qubit_count, std::span<const Gate> gates) {
  if (qubit_count > kMaxUnitaryQubits) {
    throw std::invalid_argument("circuit_unitary: " + std::to_string(qubit_count) +
                                " qubits exceeds the " + std::to_string(kMaxUnitaryQubits) +
                                "-qubit materialization limit");
  }
  const std::size_t dim = core::dimension_of(qubit_count);
  ComplexMatrix u(dim, dim);
  std::vector<Complex> column(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::fill(column.begin(), column.end(), Complex{});
    column[c] = 1.0;
    apply_gates_inplace(column, qubit_count, gates);
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = column[r];
  }
  return u;
}

ComplexMatrix circuit_unitary(const Circuit& c) { return gates_unitary(c.qubit_count(), c.gates()); }

}  // namespace dctc::circuit
