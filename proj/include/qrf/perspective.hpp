#pragma once

// Perspective assignment: the map from an N-qubit global state to the
// (N−1)-qubit state described relative to one of its qubits, which always
// sees itself in |0⟩. Two independent formulations are provided and must
// agree: a direct flip-and-merge over basis pairs, and a channel pipeline
// (dephase, perspective operator, partial trace, purify).

#include <Eigen/Dense>

#include "qrf/qstate.hpp"

namespace qrf {

// Flip-and-merge. Each basis string b with the target bit set is replaced by
// its full complement b̄; the two coefficients c₁, c₂ landing on the same
// string merge into √(|c₁|² + |c₂|²) with zero phase, and the target qubit is
// dropped. Throws TooFewQubits for n < 2 and InvalidSubsystem for a bad target.
PureState assign_perspective(const PureState& psi, int target);

// Same map evaluated as density matrix → dephase → N·ρ·N† → Tr_target → purify.
PureState assign_perspective_channel(const PureState& psi, int target);

// N = |0⟩⟨0|_P ⊗ 1 + |0⟩⟨1|_P ⊗ σx^{⊗(n−1)}; not unitary.
Eigen::MatrixXcd perspective_operator(int target, int n_qubits);

// Inserts a |0⟩ qubit at position `target` (0 ≤ target ≤ n).
PureState embed_perspective(const PureState& psi, int target);

// Z2 quantum-reference-frame change S = Σ_{g∈{0,1}} |g⁻¹⟩⟨g|_from ⊗ U†(g)^{⊗(n−1)}
// with U(1) = σx. Unitary and self-inverse.
struct QrfOperator {
  int n_qubits = 0;
  int from_label = 0;
  int to_label = 0;
  Eigen::MatrixXcd matrix;
};

QrfOperator z2_qrf_operator(int n_qubits, int from_label, int to_label);

// Throws DimensionMismatch when the operator and state sizes differ.
PureState qrf_transform(const QrfOperator& op, const PureState& psi);

}  // namespace qrf
