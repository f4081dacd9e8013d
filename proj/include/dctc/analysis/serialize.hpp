#pragma once

#include <json.hpp>

#include "dctc/analysis/cloning.hpp"
#include "dctc/analysis/experiments.hpp"
#include "dctc/analysis/uniqueness.hpp"

namespace dctc::analysis {

using Json = nlohmann::ordered_json;

/// {n, k, j, theta_kj, popcount, alpha (null when j == k), closed_form,
///  numeric: [re, im], agree}
Json to_json(const OverlapReport& r);
Json to_json(const std::vector<OverlapReport>& reports);

/// {n, k, distribution, decoded, success_prob, fixed_point}
Json to_json(const DecodeResult& r);

/// {n, m, input: {theta, phi}, min_fidelity, max_fidelity,
///  probe: {starts, dropped},
///  per_fixed_point: [{distribution, reconstructed, fidelity, residual, iterations}]}
Json to_json(const CloneResult& r);

}  // namespace dctc::analysis
