#pragma once

#include <json.hpp>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"

namespace dctc::circuit {

using Json = nlohmann::ordered_json;

/// {qubit_count, gates: [{kind, wires, angle?}], layout, slices}. The layout
/// member is null for circuits without CR/CTC registers.
Json to_json(const Circuit& c);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
Circuit circuit_from_json(const Json& j);

/// {qubit_count, amplitudes: [[re, im], ...]}
Json to_json(const core::PureState& psi);

}  // namespace dctc::circuit
