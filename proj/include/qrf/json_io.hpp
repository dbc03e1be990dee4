#pragma once

// State files: {"n_qubits": 3, "amplitudes": [[re, im], ...]} in big-endian
// basis order, optionally annotated with "perspective_of": <index>.
// Constraint reports: {"constraint": "C1", "lhs", "rhs", "residual", "satisfied"}.

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "qrf/qstate.hpp"
#include "qrf/transference.hpp"

namespace qrf {

nlohmann::json state_to_json(const PureState& psi, std::optional<int> perspective_of = {});

// Throws Parse on schema violations, plus any state_from_amplitudes error.
PureState state_from_json(const nlohmann::json& j, double tol = kNormTolerance);

// Throws Io if the file cannot be opened, Parse if it is not valid JSON.
PureState read_state_file(const std::filesystem::path& path, double tol = kNormTolerance);

nlohmann::json report_to_json(const ConstraintReport& report);

}  // namespace qrf
