#include "qrf/json_io.hpp"

#include <fstream>

#include "qrf/error.hpp"

namespace qrf {

nlohmann::json state_to_json(const PureState& psi, std::optional<int> perspective_of) {
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& a : psi.amplitudes()) amps.push_back({a.real(), a.imag()});
  nlohmann::json j{{"n_qubits", psi.n_qubits()}, {"amplitudes", std::move(amps)}};
  if (perspective_of) j["perspective_of"] = *perspective_of;
  return j;
}

PureState state_from_json(const nlohmann::json& j, double tol) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
    throw Error(ErrorKind::Parse, "state JSON needs 'n_qubits' and 'amplitudes'");
  }
  const auto& n_field = j.at("n_qubits");
  const auto& amp_field = j.at("amplitudes");
  if (!n_field.is_number_integer() || !amp_field.is_array()) {
    throw Error(ErrorKind::Parse, "malformed 'n_qubits' or 'amplitudes'");
  }
  const auto n = n_field.get<long long>();
  if (n < 1 || n > kMaxQubits) throw Error(ErrorKind::Parse, "'n_qubits' out of range");

  std::vector<Complex> amps;
  amps.reserve(amp_field.size());
  for (const auto& entry : amp_field) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw Error(ErrorKind::Parse, "each amplitude must be a [re, im] pair");
    }
    amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  if (amps.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::DimensionMismatch, "amplitude count does not equal 2^n_qubits");
  }
  return state_from_amplitudes(std::move(amps), tol);
}

PureState read_state_file(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open state file '" + path.string() + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(ErrorKind::Parse, "'" + path.string() + "' is not valid JSON");
  return state_from_json(j, tol);
}

nlohmann::json report_to_json(const ConstraintReport& report) {
  return nlohmann::json{{"constraint", to_string(report.constraint)},
                        {"lhs", report.lhs},
                        {"rhs", report.rhs},
                        {"residual", report.residual},
                        {"satisfied", report.satisfied}};
}

}  // namespace qrf
