#include "dctc/ctc/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace dctc::ctc {

using core::ComplexMatrix;
using core::DensityMatrix;

namespace {

constexpr std::size_t kMaxSquarings = 62;
constexpr std::size_t kCesaroRounds = 52;
constexpr double kSettledChange = 1e-14;
constexpr double kInvariantChange = 1e-12;
constexpr double kSameWeights = 1e-12;

using RealMatrix = std::vector<double>;

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b, std::size_t d) {
  RealMatrix out(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const double lhs = a[r * d + k];
      if (lhs == 0.0) continue;
      for (std::size_t c = 0; c < d; ++c) out[r * d + c] += lhs * b[k * d + c];
    }
  }
  return out;
}

void normalize_columns(RealMatrix& m, std::size_t d) {
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < d; ++r) sum += m[r * d + c];
    if (sum > 0.0) {
      for (std::size_t r = 0; r < d; ++r) m[r * d + c] /= sum;
    }
  }
}

double max_change(const RealMatrix& a, const RealMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::size_t saturating_pow2(std::size_t e) {
  return e >= std::numeric_limits<std::size_t>::digits ? std::numeric_limits<std::size_t>::max()
                                                        : std::size_t{1} << e;
}

/// lim T^t (or its Cesaro mean) for a column-stochastic T.
struct DoublingLimit {
  RealMatrix limit;
  std::size_t equivalent_iterations = 0;
  bool averaged = false;
};

DoublingLimit doubling_limit(const MeasurePrepareForm& form) {
  const std::size_t d = form.dimension;
  RealMatrix p = form.transition;
  for (std::size_t s = 1; s <= kMaxSquarings; ++s) {
    RealMatrix q = multiply(p, p, d);
    normalize_columns(q, d);
    const double change = max_change(p, q);
    p = std::move(q);
    if (change <= kSettledChange) {
      // One extra squaring pushes the remaining transient below round-off.
      q = multiply(p, p, d);
      normalize_columns(q, d);
      // A periodic chain also settles (T^2 = I for period 2) on a matrix
      // that is not a limit; a true limit is invariant under one more T.
      if (max_change(multiply(form.transition, q, d), q) <= kInvariantChange) {
        return {std::move(q), saturating_pow2(s + 1), false};
      }
      break;
    }
  }

  // Periodic chain: A_{2T} = (A_T + T^T A_T) / 2 with A_1 = I.
  RealMatrix avg(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) avg[i * d + i] = 1.0;
  RealMatrix power = form.transition;
  for (std::size_t s = 0; s < kCesaroRounds; ++s) {
    const RealMatrix shifted = multiply(power, avg, d);
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] = 0.5 * (avg[i] + shifted[i]);
    power = multiply(power, power, d);
    normalize_columns(power, d);
  }
  return {std::move(avg), saturating_pow2(kCesaroRounds), true};
}

std::vector<double> limit_weights(const DoublingLimit& lim, const DensityMatrix& init) {
  const std::size_t d = init.dimension();
  const auto p0 = init.diagonal();
  std::vector<double> w(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += lim.limit[r * d + c] * p0[c];
    w[r] = acc;
  }
  return w;
}

FixedPointResult finish_doubling(const CtcChannel& ch, const MeasurePrepareForm& form,
                                 const DoublingLimit& lim, const DensityMatrix& init,
                                 std::span<const double> weights, double tol) {
  DensityMatrix sigma(ch.ctc_qubits(), core::hermitize(form.prepare(weights)));
  const double residual = core::trace_distance(apply_channel(ch, sigma), sigma);
  return FixedPointResult{sigma,
                          residual,
                          lim.equivalent_iterations,
                          residual <= tol,
                          {init.diagonal(), sigma.diagonal()},
                          lim.averaged};
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("fixed-point tolerance must be positive");
}

double diagonal_distance(const DensityMatrix& a, const DensityMatrix& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::abs(a(i, i).real() - b(i, i).real());
  return 0.5 * sum;
}

}  // namespace

FixedPointResult solve_fixed_point(const CtcChannel& ch, const DensityMatrix& init, double tol,
                                   std::size_t max_iters) {
  require_tolerance(tol);
  if (init.dimension() != ch.dimension()) {
    throw std::invalid_argument("solve_fixed_point: initial state dimension mismatch");
  }

  FixedPointResult result{init, 0.0, 0, false, {init.diagonal()}, false};
  std::vector<double> residuals;
  DensityMatrix omega = init;
  std::optional<ComplexMatrix> running_sum;
  std::size_t averaged_terms = 0;
  std::optional<DensityMatrix> average;
  double average_residual = std::numeric_limits<double>::infinity();

  for (std::size_t it = 1; it <= max_iters; ++it) {
    DensityMatrix next = apply_channel(ch, omega);
    const double r = core::trace_distance(next, omega);
    result.trace.push_back(next.diagonal());
    result.iterations = it;

    if (!running_sum) {
      if (r <= tol) {
        result.sigma = omega;
        result.residual = r;
        result.converged = true;
        return result;
      }
      residuals.push_back(r);
      if (residuals.size() > kStagnationWindow &&
          r >= residuals[residuals.size() - 1 - kStagnationWindow]) {
        running_sum = ComplexMatrix(ch.dimension(), ch.dimension());
        result.used_averaging = true;
      }
    }

    if (running_sum) {
      *running_sum += next.matrix();
      ++averaged_terms;
      ComplexMatrix mean = *running_sum;
      mean *= 1.0 / static_cast<double>(averaged_terms);
      average.emplace(ch.ctc_qubits(), core::hermitize(std::move(mean)));
      average_residual = core::trace_distance(apply_channel(ch, *average), *average);
      if (average_residual <= tol) {
        result.sigma = *average;
        result.residual = average_residual;
        result.converged = true;
        return result;
      }
    }
    omega = std::move(next);
  }

  if (average) {
    result.sigma = *average;
    result.residual = average_residual;
  } else {
    result.sigma = omega;
    result.residual = core::trace_distance(apply_channel(ch, omega), omega);
  }
  result.converged = result.residual <= tol;
  return result;
}

FixedPointResult solve_by_doubling(const CtcChannel& ch, const MeasurePrepareForm& form,
                                   const DensityMatrix& init, double tol) {
  require_tolerance(tol);
  if (init.dimension() != ch.dimension() || form.dimension != ch.dimension()) {
    throw std::invalid_argument("solve_by_doubling: dimension mismatch");
  }
  const auto lim = doubling_limit(form);
  const auto weights = limit_weights(lim, init);
  return finish_doubling(ch, form, lim, init, weights, tol);
}

ProbeResult probe_fixed_points(const CtcChannel& ch, const ProbeOptions& options) {
  require_tolerance(options.tol);
  const std::size_t d = ch.dimension();
  std::vector<DensityMatrix> starts;
  starts.reserve(d + 1);
  for (std::size_t i = 0; i < d; ++i) starts.push_back(DensityMatrix::basis(ch.ctc_qubits(), i));
  starts.push_back(DensityMatrix::maximally_mixed(ch.ctc_qubits()));

  std::vector<FixedPointResult> solved;
  std::optional<MeasurePrepareForm> form;
  if (options.accelerate) form = measure_prepare_form(ch);
  if (form) {
    const auto lim = doubling_limit(*form);
    // Starts with identical limit weights share a fixed point; solve each once.
    std::vector<std::vector<double>> seen;
    for (const auto& s : starts) {
      auto w = limit_weights(lim, s);
      const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const auto& prev) {
        double l1 = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) l1 += std::abs(prev[i] - w[i]);
        return 0.5 * l1 <= kSameWeights;
      });
      if (duplicate) continue;
      solved.push_back(finish_doubling(ch, *form, lim, s, w, options.tol));
      seen.push_back(std::move(w));
    }
  } else {
    for (const auto& s : starts) solved.push_back(solve_fixed_point(ch, s, options.tol, options.max_iters));
  }

  ProbeResult out;
  out.starts = starts.size();
  for (auto& r : solved) {
    if (!r.converged) {
      ++out.dropped;
      continue;
    }
    auto match = std::find_if(out.fixed_points.begin(), out.fixed_points.end(), [&](const auto& rep) {
      return diagonal_distance(rep.sigma, r.sigma) < kClusterDistance &&
             core::trace_distance(rep.sigma, r.sigma) < kClusterDistance;
    });
    if (match == out.fixed_points.end()) {
      out.fixed_points.push_back(std::move(r));
    } else if (r.residual < match->residual) {
      *match = std::move(r);
    }
  }
  return out;
}

InitSpec parse_init_spec(const std::string& text) {
  if (text == "mixed") return InitSpec::mixed();
  if (text == "plus") return InitSpec::plus();
  constexpr std::string_view kBasisPrefix = "basis:";
  if (text.starts_with(kBasisPrefix)) {
    const char* first = text.data() + kBasisPrefix.size();
    const char* last = text.data() + text.size();
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec == std::errc{} && ptr == last && first != last) return InitSpec::basis(index);
  }
  throw std::invalid_argument("init must be 'mixed', 'plus' or 'basis:<index>', got '" + text + "'");
}

std::string to_string(const InitSpec& spec) {
  switch (spec.kind) {
    case InitSpec::Kind::kMixed:
      return "mixed";
    case InitSpec::Kind::kPlus:
      return "plus";
    case InitSpec::Kind::kBasis:
      return "basis:" + std::to_string(spec.index);
  }
  return "?";
}

DensityMatrix make_initial_state(const InitSpec& spec, std::size_t qubits) {
  switch (spec.kind) {
    case InitSpec::Kind::kMixed:
      return DensityMatrix::maximally_mixed(qubits);
    case InitSpec::Kind::kPlus: {
      const std::size_t d = core::dimension_of(qubits);
      std::vector<core::Complex> amps(d, 1.0 / std::sqrt(static_cast<double>(d)));
      return DensityMatrix(core::PureState(qubits, std::move(amps)));
    }
    case InitSpec::Kind::kBasis:
      return DensityMatrix::basis(qubits, spec.index);
  }
  throw std::logic_error("unhandled init kind");
}

}  // namespace dctc::ctc
