#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qrf/cli.hpp"
#include "qrf/json_io.hpp"
#include "qrf/rindler.hpp"

namespace qrf::cli {

namespace {

double parse_number(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.starts_with("pi")) {
    std::string_view rest = text.substr(2);
    if (rest.empty()) return std::numbers::pi;
    if (rest.front() == '/') return std::numbers::pi / parse_number(rest.substr(1));
    throw Error(ErrorKind::Config, "cannot parse number '" + std::string(text) + "'");
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorKind::Config, "cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

double snap_quarter_pi(double v) {
  return std::abs(v - rindler::kMaxR) <= 1e-9 ? rindler::kMaxR : v;
}

PureState three_qubit(std::initializer_list<std::pair<int, double>> terms) {
  std::vector<Complex> amps(8, 0.0);
  for (const auto& [index, value] : terms) amps[static_cast<std::size_t>(index)] = value;
  return PureState::normalized(std::move(amps));
}

std::vector<double> triple(std::string_view args, std::string_view name) {
  auto w = parse_list(args);
  if (w.size() != 3) {
    throw Error(ErrorKind::Config, std::string(name) + " needs three comma-separated weights");
  }
  return w;
}

}  // namespace

bool is_builtin(std::string_view source) {
  for (std::string_view prefix : {"rindler:", "ghz:", "w-even:", "w-odd:", "appc-q:"}) {
    if (source.starts_with(prefix)) return true;
  }
  return source == "sep-counterexample" || source == "worked-example";
}

PureState resolve_state(std::string_view source, double norm_tol) {
  const auto arg = [source] { return source.substr(source.find(':') + 1); };

  if (source.starts_with("rindler:")) {
    const double r = snap_quarter_pi(parse_number(arg()));
    return rindler::global_state(rindler::AccelerationParameter::from_r(r));
  }
  if (source.starts_with("ghz:")) {
    const double g = parse_number(arg());
    if (!(g >= 0.0 && g <= 1.0)) throw Error(ErrorKind::Config, "ghz weight must lie in [0, 1]");
    return three_qubit({{0b000, g}, {0b111, std::sqrt(1.0 - g * g)}});
  }
  if (source.starts_with("w-even:")) {
    const auto w = triple(arg(), "w-even");
    return three_qubit({{0b011, w[0]}, {0b101, w[1]}, {0b110, w[2]}});
  }
  if (source.starts_with("w-odd:")) {
    const auto z = triple(arg(), "w-odd");
    return three_qubit({{0b001, z[0]}, {0b010, z[1]}, {0b100, z[2]}});
  }
  if (source.starts_with("appc-q:")) {
    const double q = parse_number(arg());
    if (!(std::abs(q) < std::numbers::sqrt2 / 2.0)) {
      throw Error(ErrorKind::Config, "appc-q needs |q| < 1/sqrt(2)");
    }
    const double s = std::sqrt(0.5 - q * q);
    return three_qubit({{0b000, s}, {0b001, q}, {0b010, -q}, {0b011, s}});
  }
  if (source == "sep-counterexample") {
    return three_qubit({{0b000, 0.5}, {0b001, 0.5}, {0b010, 0.5}, {0b011, 0.5}});
  }
  if (source == "worked-example") {
    return three_qubit({{0b000, 0.5}, {0b001, 0.5}, {0b010, 0.5}, {0b111, 0.5}});
  }
  return read_state_file(std::string(source), norm_tol);
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
      throw Error(ErrorKind::Config, "grid range must be <start>:<stop>:<count>");
    }
    const double start = parse_number(text.substr(0, first));
    const double stop = parse_number(text.substr(first + 1, second - first - 1));
    const double count = parse_number(text.substr(second + 1));
    if (count < 0 || count != std::floor(count)) {
      throw Error(ErrorKind::GridOutOfDomain, "grid count must be a nonnegative integer");
    }
    grid = rindler::linspace(start, stop, static_cast<std::size_t>(count));
  } else {
    grid = parse_list(text);
  }
  for (double& v : grid) v = snap_quarter_pi(v);
  return grid;
}

int parse_perspective(std::string_view text) {
  if (text == "0" || text == "A") return 0;
  if (text == "1" || text == "B" || text == "R") return 1;
  if (text == "2" || text == "C" || text == "Rbar") return 2;
  int value = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 0) return value;
  throw Error(ErrorKind::Config, "unrecognized perspective '" + std::string(text) + "'");
}

std::vector<MeasurePair> parse_measures(std::string_view text) {
  if (text == "entropy") return {MeasurePair::Entropy};
  if (text == "linear") return {MeasurePair::Linear};
  if (text == "both") return {MeasurePair::Entropy, MeasurePair::Linear};
  throw Error(ErrorKind::Config, "measures must be entropy, linear or both");
}

}  // namespace qrf::cli
