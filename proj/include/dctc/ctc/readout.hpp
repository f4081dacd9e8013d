#pragma once

#include <vector>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"

namespace dctc::ctc {

/// Exact CR measurement distribution of U(|in><in| (x) sigma)U^dagger, indexed
/// by CR basis value. sigma is decomposed into its eigen-ensemble and each
/// member is propagated as a state vector, so the full joint density matrix
/// is never formed.
std::vector<double> readout(const circuit::Circuit& c, const core::PureState& cr_input,
                            const core::DensityMatrix& sigma);

}  // namespace dctc::ctc
