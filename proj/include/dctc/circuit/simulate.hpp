#pragma once

#include <cstddef>
#include <span>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"

namespace dctc::circuit {

/// Largest register for which circuit_unitary materializes a full matrix.
inline constexpr std::size_t kMaxUnitaryQubits = 10;

core::PureState apply_gate(const core::PureState& psi, const Gate& gate);
core::DensityMatrix apply_gate(const core::DensityMatrix& rho, const Gate& gate);

core::PureState apply_gates(const core::PureState& psi, std::span<const Gate> gates);
core::DensityMatrix apply_gates(const core::DensityMatrix& rho, std::span<const Gate> gates);

/// In-place variant for hot loops; no normalization check.
void apply_gates_inplace(std::span<core::Complex> amplitudes, std::size_t qubit_count,
                         std::span<const Gate> gates);

core::PureState apply_circuit(const Circuit& c, const core::PureState& psi);
core::DensityMatrix apply_circuit(const Circuit& c, const core::DensityMatrix& rho);

/// Product of the given gates as a 2^q x 2^q matrix (q <= kMaxUnitaryQubits).
core::ComplexMatrix gates_unitary(std::size_t qubit_count, std::span<const Gate> gates);
core::ComplexMatrix circuit_unitary(const Circuit& c);

}  // namespace dctc::circuit
