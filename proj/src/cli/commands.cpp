#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrf/cli.hpp"
#include "qrf/json_io.hpp"
#include "qrf/perspective.hpp"
#include "qrf/rindler.hpp"
#include "qrf/transference.hpp"

namespace qrf::cli {

using nlohmann::json;

int exit_code(ErrorKind kind) noexcept {
  const std::string_view category = error_category(kind);
  if (category == "io") return 2;
  if (category == "shape") return 3;
  if (category == "domain") return 4;
  return 5;
}

std::string_view error_category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
      return "io";
    case ErrorKind::NotPowerOfTwo:
    case ErrorKind::EmptyKeepSet:
    case ErrorKind::InvalidSubsystem:
    case ErrorKind::InvalidBipartition:
    case ErrorKind::TooFewQubits:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::WrongQubitCount:
      return "shape";
    case ErrorKind::NonPositiveInput:
    case ErrorKind::UnknownQuantity:
    case ErrorKind::GridOutOfDomain:
    case ErrorKind::Config:
      return "domain";
    case ErrorKind::NormOutOfTolerance:
    case ErrorKind::NotDiagonal:
      return "numeric";
  }
  return "numeric";
}

double default_tolerance() {
  if (const char* env = std::getenv("QRF_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw Error(ErrorKind::Config, "QRF_TOL must be a positive number");
    }
    return tol;
  }
  return kSatisfactionTolerance;
}

namespace {

json reports_to_json(const std::array<ConstraintReport, 3>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

bool all_satisfied(const std::array<ConstraintReport, 3>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.satisfied; });
}

void cmd_perspective(const RunConfig& config, std::ostream& out) {
  const PureState psi = resolve_state(config.state);
  out << state_to_json(assign_perspective(psi, config.perspective), config.perspective).dump(2)
      << '\n';
}

void cmd_check(const RunConfig& config, std::ostream& out) {
  const PureState psi = resolve_state(config.state);
  if (psi.n_qubits() != 3) {
    throw Error(ErrorKind::WrongQubitCount, "check needs a 3-qubit state");
  }
  json results = json::object();
  for (MeasurePair m : config.measures) {
    const auto transference = check_transference(psi, m, config.tol);
    const auto corollary = check_corollary(psi, m, config.tol);
    results[std::string(to_string(m))] = {
        {"transference", reports_to_json(transference)},
        {"corollary", reports_to_json(corollary)},
        {"transference_satisfied", all_satisfied(transference)},
        {"corollary_satisfied", all_satisfied(corollary)},
    };
  }
  const json doc{{"state", config.state},
                 {"parity", to_string(parity_class(psi))},
                 {"tolerance", config.tol},
                 {"results", std::move(results)}};
  out << doc.dump(2) << '\n';
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  std::vector<rindler::SweepRecord> records;
  for (MeasurePair m : config.measures) {
    auto part = rindler::sweep(config.grid, m);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (config.format == "csv") {
    rindler::write_sweep_csv(out, records);
    return;
  }
  // JSON rows keyed by the CSV column names.
  std::ostringstream csv;
  rindler::write_sweep_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header, line;
  std::getline(lines, header);
  const auto columns = rindler::sweep_columns();
  json rows = json::array();
  while (std::getline(lines, line)) {
    json row = json::object();
    std::size_t col = 0;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const std::string key(columns[col++]);
      if (key == "measures") {
        row[key] = cell;
      } else {
        row[key] = std::stod(cell);
      }
    }
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

PureState sample_state(SampleParity parity, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);

  static constexpr std::array<int, 4> kEven{0b000, 0b011, 0b101, 0b110};
  static constexpr std::array<int, 4> kOdd{0b001, 0b010, 0b100, 0b111};
  std::vector<Complex> amps(8, 0.0);
  auto fill = [&](auto support) {
    for (int b : support) {
      const double re = normal(rng);
      const double im = normal(rng);
      amps[static_cast<std::size_t>(b)] = Complex(re, im);
    }
  };
  switch (parity) {
    case SampleParity::Even: fill(kEven); break;
    case SampleParity::Odd: fill(kOdd); break;
    case SampleParity::Neither: fill(std::array<int, 8>{0, 1, 2, 3, 4, 5, 6, 7}); break;
  }
  return PureState::normalized(std::move(amps));
}

std::string_view to_string(SampleParity p) {
  switch (p) {
    case SampleParity::Even: return "even";
    case SampleParity::Odd: return "odd";
    case SampleParity::Neither: return "neither";
  }
  return "?";
}

void cmd_sample(const RunConfig& config, std::ostream& out) {
  if (config.count < 1) throw Error(ErrorKind::Config, "sample count must be at least 1");
  json passed = json::object();
  for (MeasurePair m : config.measures) passed[std::string(to_string(m))] = 0;

  for (std::uint64_t i = 0; i < config.count; ++i) {
    const PureState psi = sample_state(config.parity, config.seed, i);
    for (MeasurePair m : config.measures) {
      const auto reports = check_transference(psi, m, config.tol);
      for (const auto& r : reports) {
        json line = report_to_json(r);
        line["sample"] = i;
        line["measures"] = to_string(m);
        out << line.dump() << '\n';
      }
      if (all_satisfied(reports)) {
        auto& slot = passed[std::string(to_string(m))];
        slot = slot.get<int>() + 1;
      }
    }
  }
  const json summary{{"summary",
                      {{"count", config.count},
                       {"parity", to_string(config.parity)},
                       {"seed", config.seed},
                       {"passed", std::move(passed)}}}};
  out << summary.dump() << '\n';
}

SampleParity parse_parity(std::string_view text) {
  if (text == "even") return SampleParity::Even;
  if (text == "odd") return SampleParity::Odd;
  if (text == "neither") return SampleParity::Neither;
  throw Error(ErrorKind::Config, "parity must be even, odd or neither");
}

void write_error(std::ostream& err, std::string_view category, std::string_view type,
                 std::string_view message) {
  const json doc{{"error", {{"kind", category}, {"type", type}, {"message", message}}}};
  err << doc.dump() << '\n';
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
  if (!(config.tol > 0.0)) throw Error(ErrorKind::Config, "tolerance must be positive");
  switch (config.command) {
    case Command::Perspective: cmd_perspective(config, out); break;
    case Command::Check: cmd_check(config, out); break;
    case Command::Sweep: cmd_sweep(config, out); break;
    case Command::Sample: cmd_sample(config, out); break;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perspectival quantum reference frames on qubit states", "qrf"};
  app.require_subcommand(1);

  std::string state, perspective = "0", measures, grid, format = "csv", parity = "even";
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t count = 100;

  auto* persp = app.add_subcommand("perspective", "Assign a perspective to a global state");
  persp->add_option("--state", state, "State file or builtin name")->required();
  persp->add_option("--perspective", perspective, "Target qubit: 0|1|2|A|R|Rbar");
  persp->add_option("--out", out_path, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Check transference and corollary constraints");
  check->add_option("--state", state, "State file or builtin name")->required();
  check->add_option("--measures", measures, "entropy|linear|both")->default_str("both");
  check->add_option("--tol", tol, "Satisfaction tolerance");
  check->add_option("--out", out_path, "Output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Degradation sweep over the acceleration parameter");
  sweep->add_option("--grid", grid, "<start>:<stop>:<count> or comma list")->required();
  sweep->add_option("--measures", measures, "entropy|linear|both")->default_str("entropy");
  sweep->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "Output path (default stdout)");

  auto* sample = app.add_subcommand("sample", "Random parity-state transference batch");
  sample->add_option("--parity", parity, "even|odd|neither");
  sample->add_option("--count", count, "Number of samples");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--measures", measures, "entropy|linear|both")->default_str("both");
  sample->add_option("--tol", tol, "Satisfaction tolerance");
  sample->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "domain", "Config", e.what());
    return exit_code(ErrorKind::Config);
  }

  try {
    RunConfig config;
    config.state = state;
    config.format = format;
    config.seed = seed;
    config.count = count;
    config.tol = tol ? *tol : default_tolerance();
    if (!out_path.empty()) config.out = out_path;

    if (persp->parsed()) {
      config.command = Command::Perspective;
      config.perspective = parse_perspective(perspective);
    } else if (check->parsed()) {
      config.command = Command::Check;
      config.measures = parse_measures(measures.empty() ? "both" : measures);
    } else if (sweep->parsed()) {
      config.command = Command::Sweep;
      config.measures = parse_measures(measures.empty() ? "entropy" : measures);
      config.grid = parse_grid(grid);
    } else {
      config.command = Command::Sample;
      config.measures = parse_measures(measures.empty() ? "both" : measures);
      config.parity = parse_parity(parity);
    }

    std::ostringstream buffer;
    run(config, buffer);
    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) throw Error(ErrorKind::Io, "cannot open output '" + *config.out + "'");
      file << buffer.str();
      if (!file) throw Error(ErrorKind::Io, "failed writing '" + *config.out + "'");
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const Error& e) {
    write_error(err, error_category(e.kind()), to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    write_error(err, "internal", "Internal", e.what());
    return 1;
  }
}

}  // namespace qrf::cli
