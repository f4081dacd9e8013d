#include "dctc/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dctc/analysis/cloning.hpp"
#include "dctc/analysis/experiments.hpp"
#include "dctc/core/state.hpp"

namespace dctc::cli {

namespace {

// Widest decoder the cost command will build: 2n wires stay within the
// simulator's register limit.
constexpr std::size_t kMaxCostWidth = core::kMaxQubits / 2;
constexpr std::size_t kMaxUniquenessWidth = 5;

double parse_number(std::string_view text, std::string_view original) {
  if (text.starts_with('+')) text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError(fmt::format("cannot parse angle '{}'", original));
  }
  return value;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void require_width(std::size_t n, std::size_t lo, std::size_t hi, const char* name) {
  require(n >= lo && n <= hi, fmt::format("--{} must be in [{}, {}], got {}", name, lo, hi, n));
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::kEncode:
      return "encode";
    case Subcommand::kDecode:
      return "decode";
    case Subcommand::kUniqueness:
      return "uniqueness";
    case Subcommand::kConverge:
      return "converge";
    case Subcommand::kClone:
      return "clone";
    case Subcommand::kSweep:
      return "sweep";
    case Subcommand::kCost:
      return "cost";
  }
  return "?";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "csv"; }

OutputFormat RunConfig::effective_format() const {
  if (format) return *format;
  return subcommand == Subcommand::kConverge || subcommand == Subcommand::kSweep ? OutputFormat::kCsv
                                                                                : OutputFormat::kJson;
}

double parse_angle(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  const auto at = compact.find("pi");
  if (at == std::string::npos) return parse_number(compact, text);

  std::string_view coeff(compact.data(), at);
  std::string_view rest(compact.data() + at + 2, compact.size() - at - 2);
  if (coeff.ends_with('*')) {
    coeff.remove_suffix(1);
    if (coeff.empty() || coeff == "-" || coeff == "+") throw ConfigError(fmt::format("cannot parse angle '{}'", text));
  }
  double scale = 1.0;
  if (coeff == "-") {
    scale = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    scale = parse_number(coeff, text);
  }
  double value = scale * std::numbers::pi;
  if (!rest.empty()) {
    if (!rest.starts_with('/')) throw ConfigError(fmt::format("cannot parse angle '{}'", text));
    const double denom = parse_number(rest.substr(1), text);
    if (denom == 0.0) throw ConfigError(fmt::format("angle '{}' divides by zero", text));
    value /= denom;
  }
  return value;
}

void validate(const RunConfig& c) {
  require(c.tol > 0.0 && std::isfinite(c.tol), "--tol must be a positive number");
  require(c.max_iters >= 1, "--max-iters must be at least 1");
  const auto fmt_ok = c.effective_format() == OutputFormat::kJson ||
                      c.subcommand == Subcommand::kConverge || c.subcommand == Subcommand::kSweep;
  require(fmt_ok, fmt::format("{} only writes json", to_string(c.subcommand)));

  auto require_register_value = [&] {
    require(c.k < core::dimension_of(c.n), fmt::format("--k must be below 2^n = {}", core::dimension_of(c.n)));
  };
  switch (c.subcommand) {
    case Subcommand::kEncode:
      require_width(c.n, 1, core::kMaxQubits - 1, "n");
      require_register_value();
      break;
    case Subcommand::kDecode:
      require_width(c.n, 1, analysis::kMaxDecodeWidth, "n");
      require_register_value();
      break;
    case Subcommand::kUniqueness:
      require_width(c.n, 1, kMaxUniquenessWidth, "n");
      break;
    case Subcommand::kConverge:
      require_width(c.n, 1, analysis::kMaxDecodeWidth, "n");
      require_register_value();
      require(c.iters >= 1, "--iters must be at least 1");
      require(c.init.kind != ctc::InitSpec::Kind::kBasis || c.init.index < core::dimension_of(c.n),
              "--init basis index must be below 2^n");
      break;
    case Subcommand::kClone:
    case Subcommand::kSweep: {
      const std::size_t limit =
          c.subcommand == Subcommand::kClone ? analysis::kMaxCloneWidth : analysis::kMaxSweepWidth;
      require(c.n >= 1 && c.m >= 1 && c.n + c.m <= limit,
              fmt::format("--n and --m must be at least 1 with n + m <= {}", limit));
      if (c.subcommand == Subcommand::kClone) {
        require(c.theta >= 0.0 && c.theta <= std::numbers::pi, "--theta must lie in [0, pi]");
        require(c.phi >= 0.0 && c.phi < 2 * std::numbers::pi, "--phi must lie in [0, 2pi)");
      } else {
        require(c.theta_steps >= 2 && c.phi_steps >= 2, "--theta-steps and --phi-steps must be at least 2");
      }
      break;
    }
    case Subcommand::kCost:
      if (c.clone) {
        require(c.n >= 1 && c.m >= 1 && 2 * (c.n + c.m) <= core::kMaxQubits,
                fmt::format("--n and --m must be at least 1 with n + m <= {}", core::kMaxQubits / 2));
      } else {
        require_width(c.n, 1, kMaxCostWidth, "n");
      }
      break;
  }
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Deutschian CTC circuit simulator"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  RunConfig config;
  std::string theta = "0";
  std::string phi = "0";
  std::string init = "plus";
  std::string format;
  std::string out;

  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "Fixed-point tolerance (trace distance)")->capture_default_str();
    sub->add_option("--max-iters", config.max_iters, "Iteration cap for the fixed-point solver")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Write the artifact here instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* encode = app.add_subcommand("encode", "Prepare psi_k and print the encoder state");
  encode->add_option("--n", config.n, "Register width")->required();
  encode->add_option("--k", config.k, "Register value")->required();

  auto* decode = app.add_subcommand("decode", "Recover k from psi_k with the CTC decoder");
  decode->add_option("--n", config.n, "Register width")->required();
  decode->add_option("--k", config.k, "Register value")->required();
  decode->add_option("--init", init, "Initial CTC state: mixed, plus or basis:<i>")->default_str("mixed");
  add_solver(decode);

  auto* uniqueness = app.add_subcommand("uniqueness", "Check the closed-form decoder overlaps");
  uniqueness->add_option("--n", config.n, "Register width")->required();

  auto* converge = app.add_subcommand("converge", "Per-iteration CTC populations");
  converge->add_option("--n", config.n, "Register width")->required();
  converge->add_option("--k", config.k, "Register value")->required();
  converge->add_option("--iters", config.iters, "Channel applications")->capture_default_str();
  converge->add_option("--init", init, "Initial CTC state: mixed, plus or basis:<i>")->capture_default_str();

  auto* clone = app.add_subcommand("clone", "Cloning fidelity for one input state");
  clone->add_option("--n", config.n, "Polar qubits")->required();
  clone->add_option("--m", config.m, "Azimuthal qubits")->required();
  clone->add_option("--theta", theta, "Polar angle in radians (pi/4 style accepted)")->required();
  clone->add_option("--phi", phi, "Azimuthal angle in radians (pi/4 style accepted)")->required();
  add_solver(clone);

  auto* sweep = app.add_subcommand("sweep", "Worst-case cloning fidelity over a Bloch-sphere grid");
  sweep->add_option("--n", config.n, "Polar qubits")->required();
  sweep->add_option("--m", config.m, "Azimuthal qubits")->required();
  sweep->add_option("--theta-steps", config.theta_steps, "Polar grid points")->capture_default_str();
  sweep->add_option("--phi-steps", config.phi_steps, "Azimuthal grid points")->capture_default_str();
  sweep->add_option("--workers", config.workers, "Worker threads (0 = all cores)")->capture_default_str();
  add_solver(sweep);

  auto* cost = app.add_subcommand("cost", "Two-qubit gate count of the decoder or cloner");
  cost->add_option("--n", config.n, "Register width (polar qubits with --clone)")->required();
  auto* clone_flag = cost->add_flag("--clone", config.clone, "Count the cloner");
  cost->add_option("--m", config.m, "Azimuthal qubits")->needs(clone_flag);

  for (auto* sub : {encode, decode, uniqueness, converge, clone, sweep, cost}) add_output(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {encode, Subcommand::kEncode}, {decode, Subcommand::kDecode}, {uniqueness, Subcommand::kUniqueness},
      {converge, Subcommand::kConverge}, {clone, Subcommand::kClone}, {sweep, Subcommand::kSweep},
      {cost, Subcommand::kCost}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) config.subcommand = kind;
  }

  if (config.subcommand == Subcommand::kDecode && decode->count("--init") == 0) init = "mixed";
  try {
    config.init = ctc::parse_init_spec(init);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.subcommand == Subcommand::kClone) {
    config.theta = parse_angle(theta);
    config.phi = parse_angle(phi);
  }
  if (!format.empty()) config.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  if (!out.empty()) config.out = out;

  validate(config);
  return config;
}

}  // namespace dctc::cli
