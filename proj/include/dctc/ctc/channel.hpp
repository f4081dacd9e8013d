#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"

namespace dctc::ctc {

/// Kraus operator stored as its nonzero columns. The circuits built here
/// never target a CR wire after the swap, so each K_i has a single nonzero
/// column and dense storage would waste a factor of 2^width.
class KrausOperator {
 public:
  explicit KrausOperator(std::size_t dimension) : dimension_(dimension) {}

  void add_column(std::size_t index, std::vector<core::Complex> column);

  std::size_t dimension() const { return dimension_; }
  std::span<const std::size_t> support() const { return support_; }
  std::span<const core::Complex> column(std::size_t slot) const { return columns_[slot]; }

  core::ComplexMatrix dense() const;

 private:
  std::size_t dimension_;
  std::vector<std::size_t> support_;
  std::vector<std::vector<core::Complex>> columns_;
};

/// N(omega) = Tr_CR(U (|in><in| (x) omega) U^dagger) = sum_i K_i omega K_i^dagger,
/// K_i = (<i|_CR (x) I) U (|in>_CR (x) I). Immutable once built.
class CtcChannel {
 public:
  CtcChannel(std::size_t ctc_qubits, std::vector<KrausOperator> kraus,
             std::shared_ptr<const circuit::Circuit> source, core::PureState cr_input);

  std::size_t ctc_qubits() const { return ctc_qubits_; }
  std::size_t dimension() const { return core::dimension_of(ctc_qubits_); }
  std::span<const KrausOperator> kraus() const { return kraus_; }
  const circuit::Circuit& circuit() const { return *source_; }
  const core::PureState& cr_input() const { return cr_input_; }

 private:
  std::size_t ctc_qubits_;
  std::vector<KrausOperator> kraus_;
  std::shared_ptr<const circuit::Circuit> source_;
  core::PureState cr_input_;
};

/// Requires a circuit with a register layout covering every wire and a CR
/// input of matching width; throws std::invalid_argument otherwise.
CtcChannel kraus_from(const circuit::Circuit& c, const core::PureState& cr_input);
/// Accepts a rank-one density matrix and rejects mixed CR inputs.
CtcChannel kraus_from(const circuit::Circuit& c, const core::DensityMatrix& cr_input);

core::DensityMatrix apply_channel(const CtcChannel& ch, const core::DensityMatrix& omega);

/// sum_i K_i^dagger K_i; equals the identity for a trace-preserving channel.
core::ComplexMatrix kraus_completeness(const CtcChannel& ch);

/// A channel whose Kraus operators each read a single input column acts as
/// N(omega) = sum_c <c|omega|c> tau_c: it measures the CTC register in the
/// computational basis and prepares tau_c. Its iterates are then governed by
/// the column-stochastic matrix transition(r, c) = <r|tau_c|r>.
struct MeasurePrepareForm {
  std::size_t dimension = 0;
  /// Rank-one components of each tau_c: tau_c = sum_v |v><v|.
  std::vector<std::vector<std::vector<core::Complex>>> preparations;
  /// Row-major dimension x dimension.
  std::vector<double> transition;

  double transition_at(std::size_t r, std::size_t c) const { return transition[r * dimension + c]; }
  /// sum_c weights[c] tau_c
  core::ComplexMatrix prepare(std::span<const double> weights) const;
};

std::optional<MeasurePrepareForm> measure_prepare_form(const CtcChannel& ch);

}  // namespace dctc::ctc
