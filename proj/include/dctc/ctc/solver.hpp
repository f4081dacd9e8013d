#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dctc/ctc/channel.hpp"

namespace dctc::ctc {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 1000;
/// Plain iteration switches to Cesaro averaging when the residual has not
/// decreased across this many iterations.
inline constexpr std::size_t kStagnationWindow = 10;
/// Trace distance below which two fixed points are treated as one.
inline constexpr double kClusterDistance = 1e-6;

struct FixedPointResult {
  core::DensityMatrix sigma;
  /// trace_distance(N(sigma), sigma)
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Diagonal populations: entry 0 is the initial state, entry t the state
  /// after t channel applications.
  std::vector<std::vector<double>> trace;
  bool used_averaging = false;
};

/// Iterates omega <- N(omega) until trace_distance(N(omega), omega) <= tol or
/// max_iters applications. Stagnation triggers Cesaro averaging of the
/// iterates. Never throws on non-convergence; check `converged`.
FixedPointResult solve_fixed_point(const CtcChannel& ch, const core::DensityMatrix& init,
                                   double tol = kDefaultTolerance,
                                   std::size_t max_iters = kDefaultMaxIterations);

/// Limit of the iteration from `init` for a measure-and-prepare channel,
/// computed by repeated squaring of the transition matrix (Cesaro-averaged
/// doubling if the chain is periodic). `iterations` reports the equivalent
/// number of channel applications and `trace` holds only the initial and
/// final populations.
FixedPointResult solve_by_doubling(const CtcChannel& ch, const MeasurePrepareForm& form,
                                   const core::DensityMatrix& init, double tol = kDefaultTolerance);

struct ProbeOptions {
  double tol = kDefaultTolerance;
  std::size_t max_iters = kDefaultMaxIterations;
  /// Use solve_by_doubling when the channel is measure-and-prepare.
  bool accelerate = true;
};

struct ProbeResult {
  /// Cluster representatives (lowest residual member of each cluster).
  std::vector<FixedPointResult> fixed_points;
  std::size_t starts = 0;
  std::size_t dropped = 0;
};

/// Solves from every computational basis state and from I/d, drops
/// non-converged runs, and clusters the rest by trace distance.
ProbeResult probe_fixed_points(const CtcChannel& ch, const ProbeOptions& options = {});

/// How the CTC register is initialized before iterating.
struct InitSpec {
  enum class Kind { kMixed, kPlus, kBasis };
  Kind kind = Kind::kMixed;
  std::size_t index = 0;

  static InitSpec mixed() { return {Kind::kMixed, 0}; }
  static InitSpec plus() { return {Kind::kPlus, 0}; }
  static InitSpec basis(std::size_t i) { return {Kind::kBasis, i}; }

  friend bool operator==(const InitSpec&, const InitSpec&) = default;
};

/// Parses "mixed", "plus" or "basis:<i>"; throws std::invalid_argument.
InitSpec parse_init_spec(const std::string& text);
std::string to_string(const InitSpec& spec);
core::DensityMatrix make_initial_state(const InitSpec& spec, std::size_t qubits);

}  // namespace dctc::ctc
