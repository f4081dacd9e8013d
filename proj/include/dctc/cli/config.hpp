#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dctc/ctc/solver.hpp"

namespace dctc::cli {

enum class Subcommand { kEncode, kDecode, kUniqueness, kConverge, kClone, kSweep, kCost };
enum class OutputFormat { kJson, kCsv };

std::string to_string(Subcommand s);
std::string to_string(OutputFormat f);

struct RunConfig {
  Subcommand subcommand = Subcommand::kCost;
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t k = 0;
  double theta = 0.0;
  double phi = 0.0;
  double tol = ctc::kDefaultTolerance;
  std::size_t max_iters = ctc::kDefaultMaxIterations;
  std::size_t iters = 7;
  ctc::InitSpec init = ctc::InitSpec::plus();
  std::size_t theta_steps = 9;
  std::size_t phi_steps = 16;
  /// cost: count the cloner instead of the decoder.
  bool clone = false;
  /// sweep: 0 picks the hardware concurrency.
  std::size_t workers = 0;
  std::optional<std::string> out;
  /// Unset means the subcommand's natural format (CSV for converge and sweep).
  std::optional<OutputFormat> format;

  OutputFormat effective_format() const;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radians as a plain number or a multiple of pi: "0.5", "pi", "-pi/4",
/// "3pi/4", "2*pi/3", "0.5*pi". Throws ConfigError.
double parse_angle(std::string_view text);

/// Range checks for every flag the subcommand uses. Throws ConfigError.
void validate(const RunConfig& config);

/// Thrown by parse_args when the user asked for help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses argv (argv[0] is the program name) into a validated RunConfig.
/// Throws ConfigError on bad usage and HelpRequested for --help.
RunConfig parse_args(int argc, const char* const* argv);

}  // namespace dctc::cli
