#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dctc/circuit/circuit.hpp"
#include "dctc/core/state.hpp"
#include "dctc/ctc/solver.hpp"

namespace dctc::analysis {

inline constexpr std::size_t kMaxCloneWidth = 8;
inline constexpr std::size_t kMaxSweepWidth = 6;

struct FixedPointClone {
  /// CR outcome distribution indexed by (k << m) | l.
  std::vector<double> distribution;
  /// sum_c p(c) |bloch(theta_k, phi_l)><bloch(theta_k, phi_l)|
  core::DensityMatrix reconstructed;
  double fidelity = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

struct CloneResult {
  std::size_t n = 0;
  std::size_t m = 0;
  double theta = 0.0;
  double phi = 0.0;
  std::vector<FixedPointClone> per_fixed_point;
  double min_fidelity = 0.0;
  double max_fidelity = 0.0;
  std::size_t probe_starts = 0;
  std::size_t probe_dropped = 0;
};

/// Raised when no probe start reaches a fixed point.
class CloneError : public std::runtime_error {
 public:
  CloneError(std::size_t n, std::size_t m, double theta, double phi, std::size_t starts);
  std::size_t starts() const { return starts_; }

 private:
  std::size_t starts_;
};

/// Builds the cloner, finds every fixed point reachable from the probe starts
/// and reconstructs the target qubit from each one's readout. Nature's choice
/// among several fixed points is unknown, so the min and max are reported.
CloneResult clone_fidelity(std::size_t n, std::size_t m, double theta, double phi,
                           const ctc::ProbeOptions& options = {});
/// Same, reusing a circuit from build_cloner.
CloneResult clone_fidelity(const circuit::Circuit& cloner, double theta, double phi,
                           const ctc::ProbeOptions& options = {});

struct SweepRow {
  double theta = 0.0;
  double phi = 0.0;
  /// Worst case over fixed points.
  double fidelity = 0.0;
  std::size_t fixed_points = 0;
  /// Every probe start converged.
  bool converged = false;
};

struct SweepFailure {
  double theta = 0.0;
  double phi = 0.0;
  std::string reason;
};

struct SweepTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t theta_steps = 0;
  std::size_t phi_steps = 0;
  /// Grid order: theta outer, phi inner. Failed points are absent.
  std::vector<SweepRow> rows;
  std::vector<SweepFailure> failures;

  double mean_fidelity() const;
};

struct SweepOptions {
  ctc::ProbeOptions probe;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

/// Grid theta_i = pi i / (theta_steps - 1), phi_j = 2 pi j / phi_steps.
SweepTable bloch_sweep(std::size_t n, std::size_t m, std::size_t theta_steps, std::size_t phi_steps,
                       const SweepOptions& options = {});

inline constexpr const char* kSweepCsvHeader = "theta,phi,fidelity,fixed_points,converged";
std::string to_csv(const SweepTable& table);

}  // namespace dctc::analysis
