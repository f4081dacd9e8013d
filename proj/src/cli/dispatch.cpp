#include "dctc/cli/dispatch.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "dctc/analysis/serialize.hpp"
#include "dctc/circuit/builders.hpp"
#include "dctc/circuit/serialize.hpp"
#include "dctc/circuit/simulate.hpp"

namespace dctc::cli {

using Json = nlohmann::ordered_json;

namespace {

/// A failure that still produced an artifact worth writing.
struct Outcome {
  std::string artifact;
  std::optional<Json> error;
};

Json error_json(std::string_view kind, std::string_view message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

std::string bitstring(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t b = 0; b < width; ++b) {
    if (value & (std::size_t{1} << (width - 1 - b))) s[b] = '1';
  }
  return s;
}

Outcome run_encode(const RunConfig& c) {
  const auto encoder = circuit::build_encoder(c.n, c.k);
  const auto state = circuit::apply_circuit(encoder, core::PureState::basis(c.n + 1, 0));
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["encoded_qubit"] = circuit::to_json(circuit::psi_k(c.n, c.k));
  j["state"] = circuit::to_json(state);
  j["circuit"] = circuit::to_json(encoder);
  return {j.dump(), std::nullopt};
}

Outcome run_decode(const RunConfig& c) {
  const auto r = analysis::decode_experiment(c.n, c.k, {c.tol, c.max_iters, c.init});
  Outcome o{analysis::to_json(r).dump(), std::nullopt};
  if (!r.fixed_point.converged) {
    o.error = error_json("convergence", fmt::format("fixed point not reached within {} iterations (residual {})",
                                                     c.max_iters, r.fixed_point.residual));
  }
  return o;
}

Outcome run_uniqueness(const RunConfig& c) {
  const auto reports = analysis::evaluate_overlaps(c.n);
  Outcome o{analysis::to_json(reports).dump(), std::nullopt};
  for (const auto& r : reports) {
    if (!r.agree || r.closed_form == 0.0) {
      o.error = error_json("uniqueness", analysis::UniquenessError(r, {}).what());
      break;
    }
  }
  return o;
}

Outcome run_converge(const RunConfig& c) {
  const auto rows = analysis::convergence_trace(c.n, c.k, c.iters, c.init);
  if (c.effective_format() == OutputFormat::kJson) {
    Json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["init"] = ctc::to_string(c.init);
    j["populations"] = rows;
    return {j.dump(), std::nullopt};
  }
  std::string csv = "iteration";
  for (std::size_t v = 0; v < rows.front().size(); ++v) csv += "," + bitstring(v, c.n);
  csv += '\n';
  for (std::size_t t = 0; t < rows.size(); ++t) {
    csv += fmt::format("{}", t);
    for (double p : rows[t]) csv += fmt::format(",{}", p);
    csv += '\n';
  }
  return {csv, std::nullopt};
}

Outcome run_clone(const RunConfig& c) {
  const auto r = analysis::clone_fidelity(c.n, c.m, c.theta, c.phi, {c.tol, c.max_iters, true});
  return {analysis::to_json(r).dump(), std::nullopt};
}

Outcome run_sweep(const RunConfig& c) {
  const auto table = analysis::bloch_sweep(c.n, c.m, c.theta_steps, c.phi_steps,
                                           {{c.tol, c.max_iters, true}, c.workers});
  Outcome o;
  if (c.effective_format() == OutputFormat::kCsv) {
    o.artifact = analysis::to_csv(table);
  } else {
    Json j;
    j["n"] = c.n;
    j["m"] = c.m;
    j["fidelity"] = "min over fixed points";
    Json rows = Json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"theta", r.theta}, {"phi", r.phi}, {"fidelity", r.fidelity},
                      {"fixed_points", r.fixed_points}, {"converged", r.converged}});
    }
    j["rows"] = std::move(rows);
    o.artifact = j.dump();
  }
  if (!table.failures.empty()) {
    Json failures = Json::array();
    for (const auto& f : table.failures) {
      failures.push_back({{"theta", f.theta}, {"phi", f.phi}, {"reason", f.reason}});
    }
    auto e = error_json("sweep", fmt::format("{} grid points failed", table.failures.size()));
    e["failures"] = std::move(failures);
    o.error = std::move(e);
  }
  return o;
}

Outcome run_cost(const RunConfig& c) {
  const auto circ = c.clone ? circuit::build_cloner(c.n, c.m) : circuit::build_decoder(c.n);
  const std::size_t count = circuit::two_qubit_gate_count(circ);
  const std::size_t expected = c.clone ? 5 * (c.n + c.m) - 2 : 5 * c.n - 2;
  Json j;
  j["two_qubit_gates"] = count;
  j["formula"] = c.clone ? "5(n+m)-2" : "5n-2";
  Outcome o{j.dump(), std::nullopt};
  if (count != expected) {
    o.error = error_json("cost", fmt::format("counted {} two-qubit gates, formula gives {}", count, expected));
  }
  return o;
}

Outcome execute(const RunConfig& c) {
  switch (c.subcommand) {
    case Subcommand::kEncode:
      return run_encode(c);
    case Subcommand::kDecode:
      return run_decode(c);
    case Subcommand::kUniqueness:
      return run_uniqueness(c);
    case Subcommand::kConverge:
      return run_converge(c);
    case Subcommand::kClone:
      return run_clone(c);
    case Subcommand::kSweep:
      return run_sweep(c);
    case Subcommand::kCost:
      return run_cost(c);
  }
  throw std::logic_error("unhandled subcommand");
}

}  // namespace

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    validate(config);
    outcome = execute(config);
  } catch (const ConfigError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 1;
  } catch (const analysis::CloneError& e) {
    err << error_json("convergence", e.what()).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_json("failure", e.what()).dump() << '\n';
    return 1;
  }

  if (!outcome.artifact.ends_with('\n')) outcome.artifact += '\n';
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    file << outcome.artifact;
    if (!file) {
      err << error_json("io", "cannot write " + *config.out).dump() << '\n';
      return 1;
    }
  } else {
    out << outcome.artifact;
  }
  if (outcome.error) {
    err << outcome.error->dump() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const ConfigError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 1;
  }
  return dispatch(config, out, err);
}

}  // namespace dctc::cli
