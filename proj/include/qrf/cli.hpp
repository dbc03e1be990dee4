#pragma once

// Command-line front end. Subcommands: perspective, check, sweep, sample.
//
// Exit codes: 0 ok, 2 io, 3 shape, 4 domain, 5 numeric. On failure a single
// JSON object {"error": {"kind", "type", "message"}} is written to stderr.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrf/error.hpp"
#include "qrf/measures.hpp"
#include "qrf/qstate.hpp"

namespace qrf::cli {

enum class Command { Perspective, Check, Sweep, Sample };

enum class SampleParity { Even, Odd, Neither };

struct RunConfig {
  Command command = Command::Check;
  std::string state;  // file path or builtin name
  int perspective = 0;
  std::vector<MeasurePair> measures{MeasurePair::Entropy};
  std::vector<double> grid;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "csv";
  std::size_t count = 100;
  SampleParity parity = SampleParity::Even;
};

// Builtins: rindler:<r>, ghz:<g>, w-even:<w1>,<w2>,<w3>, w-odd:<z1>,<z2>,<z3>,
// sep-counterexample, appc-q:<q>, worked-example. Anything else is a path.
PureState resolve_state(std::string_view source, double norm_tol = kNormTolerance);

bool is_builtin(std::string_view source);

// "<start>:<stop>:<count>" or a comma-separated list; "pi" and "pi/<k>" are
// accepted as numbers. Values within 1e-9 of π/4 snap to π/4.
std::vector<double> parse_grid(std::string_view text);

// "0|1|2|A|B|C|R|Rbar"
int parse_perspective(std::string_view text);

std::vector<MeasurePair> parse_measures(std::string_view text);

int exit_code(ErrorKind kind) noexcept;
std::string_view error_category(ErrorKind kind) noexcept;

// Default satisfaction tolerance, honouring the QRF_TOL environment variable.
double default_tolerance();

// Executes a validated config, writing the command output to `out`.
void run(const RunConfig& config, std::ostream& out);

// Full entry point: argument parsing, output routing and error reporting.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrf::cli
