#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dctc/core/matrix.hpp"

namespace dctc::core {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Upper bound on total register size handled by the dense simulator.
inline constexpr std::size_t kMaxQubits = 16;

inline constexpr std::size_t dimension_of(std::size_t qubits) { return std::size_t{1} << qubits; }

/// Normalized state vector of a qubit register. Wire 0 is the most significant
/// bit of the basis index.
class PureState {
 public:
  /// Throws std::invalid_argument if the length is not 2^qubit_count or the
  /// squared norm deviates from 1 by more than kNormTolerance.
  PureState(std::size_t qubit_count, std::vector<Complex> amplitudes);

  static PureState basis(std::size_t qubit_count, std::size_t index);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  /// <this|other>
  Complex inner(const PureState& other) const;
  double probability(std::size_t index) const;

 private:
  std::size_t qubit_count_;
  std::vector<Complex> amplitudes_;
};

/// |a> (x) |b>, a on the leading wires.
PureState tensor(const PureState& a, const PureState& b);

class DensityMatrix {
 public:
  /// Checks shape, Hermiticity, unit trace and a non-negative diagonal.
  /// The full PSD proxy lives in satisfies_psd_proxy() since it is costlier.
  DensityMatrix(std::size_t qubit_count, ComplexMatrix matrix);
  explicit DensityMatrix(const PureState& psi);

  static DensityMatrix maximally_mixed(std::size_t qubit_count);
  static DensityMatrix basis(std::size_t qubit_count, std::size_t index);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  std::vector<double> diagonal() const;

 private:
  std::size_t qubit_count_;
  ComplexMatrix matrix_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// (m + m^dagger) / 2. Strips anti-Hermitian round-off from the outputs of
/// Hermiticity-preserving maps; the trace is left untouched.
ComplexMatrix hermitize(ComplexMatrix m);

/// Non-negative diagonal plus <v|rho|v> >= -kPsdTolerance for a fixed,
/// deterministic family of sampled unit vectors.
bool satisfies_psd_proxy(const DensityMatrix& rho, std::size_t samples = 32);

/// Embeds a 2^k x 2^k operator (k = wires.size(), 1 or 2) at the given wires
/// and applies it in place to a state vector over total_qubits wires. The
/// first listed wire is the most significant bit of the operator's index.
void apply_local_operator(std::span<Complex> amplitudes, std::size_t total_qubits,
                          std::span<const std::size_t> wires, const ComplexMatrix& op);

PureState apply_operator(const PureState& psi, std::span<const std::size_t> wires,
                         const ComplexMatrix& op);
/// rho -> G rho G^dagger with G the embedded operator.
DensityMatrix apply_operator(const DensityMatrix& rho, std::span<const std::size_t> wires,
                             const ComplexMatrix& op);

/// Reduced state over `keep` (relative order of kept wires is preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity(const PureState& psi, const DensityMatrix& rho);

/// Half the trace norm of (a - b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  std::vector<double> values;   // ascending
  ComplexMatrix vectors;        // column i pairs with values[i]
};

HermitianEigen hermitian_eigen(const ComplexMatrix& m);

}  // namespace dctc::core
