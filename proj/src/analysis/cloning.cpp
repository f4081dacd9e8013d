#include "dctc/analysis/cloning.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "dctc/circuit/builders.hpp"
#include "dctc/ctc/readout.hpp"

namespace dctc::analysis {

using std::numbers::pi;

namespace {

void require_widths(std::size_t n, std::size_t m, std::size_t limit) {
  if (n == 0 || m == 0 || n + m > limit) {
    throw std::out_of_range(fmt::format("cloning needs n, m >= 1 and n + m <= {}", limit));
  }
}

core::DensityMatrix reconstruct(std::size_t n, std::size_t m, const std::vector<double>& distribution) {
  core::ComplexMatrix rho(2, 2);
  for (std::size_t c = 0; c < distribution.size(); ++c) {
    if (distribution[c] == 0.0) continue;
    const auto angles = circuit::cloner_outcome_angles(n, m, c);
    const auto b = circuit::bloch_state(angles.theta, angles.phi);
    auto term = core::ComplexMatrix::outer(b.amplitudes(), b.amplitudes());
    term *= distribution[c];
    rho += term;
  }
  return core::DensityMatrix(1, core::hermitize(rho));
}

}  // namespace

CloneError::CloneError(std::size_t n, std::size_t m, double theta, double phi, std::size_t starts)
    : std::runtime_error(fmt::format("no fixed point converged for n={} m={} theta={} phi={} ({} starts)",
                                     n, m, theta, phi, starts)),
      starts_(starts) {}

CloneResult clone_fidelity(const circuit::Circuit& cloner, double theta, double phi,
                           const ctc::ProbeOptions& options) {
  if (!cloner.layout() || cloner.layout()->m == 0) {
    throw std::invalid_argument("clone_fidelity: expected a circuit from build_cloner");
  }
  const std::size_t n = cloner.layout()->n;
  const std::size_t m = cloner.layout()->m;
  require_widths(n, m, kMaxCloneWidth);

  const auto target = circuit::bloch_state(theta, phi);
  const auto input = circuit::padded_input(target, n + m);
  const auto channel = ctc::kraus_from(cloner, input);
  auto probe = ctc::probe_fixed_points(channel, options);

  CloneResult out;
  out.n = n;
  out.m = m;
  out.theta = theta;
  out.phi = phi;
  out.probe_starts = probe.starts;
  out.probe_dropped = probe.dropped;
  if (probe.fixed_points.empty()) throw CloneError(n, m, theta, phi, probe.starts);

  for (const auto& fp : probe.fixed_points) {
    auto distribution = ctc::readout(cloner, input, fp.sigma);
    auto rho = reconstruct(n, m, distribution);
    const double f = core::fidelity(target, rho);
    out.per_fixed_point.push_back({std::move(distribution), std::move(rho), f, fp.residual, fp.iterations});
  }
  const auto [lo, hi] = std::minmax_element(out.per_fixed_point.begin(), out.per_fixed_point.end(),
                                            [](const auto& a, const auto& b) { return a.fidelity < b.fidelity; });
  out.min_fidelity = lo->fidelity;
  out.max_fidelity = hi->fidelity;
  return out;
}

CloneResult clone_fidelity(std::size_t n, std::size_t m, double theta, double phi,
                           const ctc::ProbeOptions& options) {
  require_widths(n, m, kMaxCloneWidth);
  return clone_fidelity(circuit::build_cloner(n, m), theta, phi, options);
}

double SweepTable::mean_fidelity() const {
  if (rows.empty()) throw std::logic_error("sweep has no successful points");
  double sum = 0.0;
  for (const auto& r : rows) sum += r.fidelity;
  return sum / static_cast<double>(rows.size());
}

SweepTable bloch_sweep(std::size_t n, std::size_t m, std::size_t theta_steps, std::size_t phi_steps,
                       const SweepOptions& options) {
  require_widths(n, m, kMaxSweepWidth);
  if (theta_steps < 2 || phi_steps < 2) throw std::invalid_argument("sweep grid sizes must be at least 2");

  const auto cloner = circuit::build_cloner(n, m);
  const std::size_t points = theta_steps * phi_steps;
  struct Outcome {
    double theta = 0.0;
    double phi = 0.0;
    std::optional<SweepRow> row;
    std::string reason;
  };
  std::vector<Outcome> outcomes(points);

  auto evaluate = [&](std::size_t p) {
    auto& o = outcomes[p];
    o.theta = pi * static_cast<double>(p / phi_steps) / static_cast<double>(theta_steps - 1);
    o.phi = 2 * pi * static_cast<double>(p % phi_steps) / static_cast<double>(phi_steps);
    try {
      const auto r = clone_fidelity(cloner, o.theta, o.phi, options.probe);
      o.row = SweepRow{o.theta, o.phi, r.min_fidelity, r.per_fixed_point.size(), r.probe_dropped == 0};
    } catch (const std::exception& e) {
      o.reason = e.what();
    }
  };

  std::size_t workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, points);
  if (workers == 1) {
    for (std::size_t p = 0; p < points; ++p) evaluate(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < points; p = next++) evaluate(p);
      });
    }
  }

  SweepTable table{n, m, theta_steps, phi_steps, {}, {}};
  for (auto& o : outcomes) {
    if (o.row) {
      table.rows.push_back(*o.row);
    } else {
      table.failures.push_back({o.theta, o.phi, std::move(o.reason)});
    }
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& r : table.rows) {
    out += fmt::format("{},{},{},{},{}\n", r.theta, r.phi, r.fidelity, r.fixed_points,
                       r.converged ? "true" : "false");
  }
  return out;
}

}  // namespace dctc::analysis
