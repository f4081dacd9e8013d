#pragma once

#include <json.hpp>

#include "dctc/ctc/solver.hpp"

namespace dctc::ctc {

using Json = nlohmann::ordered_json;

/// {residual, iterations, converged, used_averaging, sigma_diagonal, trace}
Json to_json(const FixedPointResult& r);

/// Row-major [[[re, im], ...], ...]
Json to_json(const core::ComplexMatrix& m);

}  // namespace dctc::ctc
