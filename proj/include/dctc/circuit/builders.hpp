#pragma once

#include <cstddef>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"

namespace dctc::circuit {

/// cos(pi k / 2^n)|0> + sin(pi k / 2^n)|1>, one of 2^n evenly spaced states on
/// the XZ great circle.
core::PureState psi_k(std::size_t n, std::size_t k);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
core::PureState bloch_state(double theta, double phi);

/// Register input |psi> (x) |0>^(width-1) used on the CR side of the decoder
/// and the cloner.
core::PureState padded_input(const core::PureState& psi, std::size_t width);

/// Prepares |psi_k> on wire 0 from |0...0>. Wires 1..n hold the register
/// a_n ... a_1 (most significant bit first); the "prepare" slice flips the
/// set bits and the "encode" slice holds one controlled-Ry per bit, bit a_i
/// rotating by 2 pi 2^(i-1) / 2^n. Throws std::invalid_argument for n == 0
/// and std::out_of_range for k >= 2^n.
Circuit build_encoder(std::size_t n, std::size_t k);

/// U = C W T R S on 2n wires: CR = 0..n-1, CTC = n..2n-1. Slices S, R, T, W, C
/// and V (= C W T R) are recorded. Uses 5n - 2 two-qubit gates.
Circuit build_decoder(std::size_t n);

/// Cloning circuit with n polar and m azimuthal qubits per register, 2(n+m)
/// wires. The CR register carries the input on wire 0 followed by ancillas;
/// the R slice applies the m azimuthal controlled-Rz rotations before the n
/// polar controlled-Ry rotations. Uses 5(n+m) - 2 two-qubit gates.
Circuit build_cloner(std::size_t n, std::size_t m);

/// Polar/azimuthal angles represented by a cloner CR outcome (k << m) | l.
struct BlochAngles {
  double theta;
  double phi;
};
BlochAngles cloner_outcome_angles(std::size_t n, std::size_t m, std::size_t outcome);

}  // namespace dctc::circuit
