#include "qrf/perspective.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qrf/error.hpp"
#include "qrf/kernels.hpp"

namespace qrf {

namespace {

void require_target(int target, int n_qubits) {
  if (n_qubits < 2) {
    throw Error(ErrorKind::TooFewQubits, "perspective assignment needs at least two qubits");
  }
  if (target < 0 || target >= n_qubits) {
    throw Error(ErrorKind::InvalidSubsystem,
                "perspective target " + std::to_string(target) + " out of range");
  }
}

// Removes bit `qubit` (0 = most significant) from an n-bit index.
std::size_t drop_bit(std::size_t index, int qubit, int n_qubits) {
  const int low_bits = n_qubits - 1 - qubit;
  const std::size_t low = index & ((std::size_t{1} << low_bits) - 1);
  const std::size_t high = index >> (low_bits + 1);
  return (high << low_bits) | low;
}

std::vector<int> all_but(int skip, int n_qubits) {
  std::vector<int> out;
  for (int q = 0; q < n_qubits; ++q) {
    if (q != skip) out.push_back(q);
  }
  return out;
}

}  // namespace

PureState assign_perspective(const PureState& psi, int target) {
  const int n = psi.n_qubits();
  require_target(target, n);

  std::vector<double> weights(psi.dim());
  kernels::flip_pair_weights(psi.amplitudes(), weights);

  std::vector<Complex> out(psi.dim() / 2);
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    if (bit_of(b, target, n) == 0) out[drop_bit(b, target, n)] = std::sqrt(weights[b]);
  }
  return PureState::normalized(std::move(out));
}

Eigen::MatrixXcd perspective_operator(int target, int n_qubits) {
  if (n_qubits < 1 || target < 0 || target >= n_qubits) {
    throw Error(ErrorKind::InvalidSubsystem, "perspective operator target out of range");
  }
  const auto dim = Eigen::Index{1} << n_qubits;
  const Eigen::Index all_ones = dim - 1;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const bool target_set = bit_of(static_cast<std::size_t>(b), target, n_qubits) == 1;
    // |1⟩_P ⊗ |x⟩ ↦ |0⟩_P ⊗ σx^{⊗(n−1)}|x⟩, i.e. flip every bit.
    op(target_set ? (b ^ all_ones) : b, b) = 1.0;
  }
  return op;
}

PureState assign_perspective_channel(const PureState& psi, int target) {
  const int n = psi.n_qubits();
  require_target(target, n);

  const DensityMatrix dephased = dephase(density_matrix(psi));
  const Eigen::MatrixXcd op = perspective_operator(target, n);
  const DensityMatrix framed(op * dephased.matrix() * op.adjoint());
  const std::vector<int> rest = all_but(target, n);
  return purify_diagonal(partial_trace(framed, rest));
}

PureState embed_perspective(const PureState& psi, int target) {
  const int n = psi.n_qubits();
  if (target < 0 || target > n) {
    throw Error(ErrorKind::InvalidSubsystem, "embedding position out of range");
  }
  std::vector<Complex> out(psi.dim() * 2, Complex{0.0, 0.0});
  for (std::size_t b = 0; b < out.size(); ++b) {
    if (bit_of(b, target, n + 1) == 0) out[b] = psi[drop_bit(b, target, n + 1)];
  }
  return PureState::normalized(std::move(out));
}

QrfOperator z2_qrf_operator(int n_qubits, int from_label, int to_label) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorKind::DimensionMismatch, "unsupported qubit count for frame operator");
  }
  if (from_label < 0 || from_label >= n_qubits || to_label < 0 || to_label >= n_qubits) {
    throw Error(ErrorKind::InvalidSubsystem, "frame label out of range");
  }
  const auto dim = Eigen::Index{1} << n_qubits;
  // σx on every qubit except the frame slot.
  const Eigen::Index spectators = (dim - 1) ^ (Eigen::Index{1} << (n_qubits - 1 - from_label));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int g = bit_of(static_cast<std::size_t>(b), from_label, n_qubits);
    // g⁻¹ = g in Z2, and U†(1) = σx.
    m(g == 0 ? b : (b ^ spectators), b) = 1.0;
  }
  return QrfOperator{n_qubits, from_label, to_label, std::move(m)};
}

PureState qrf_transform(const QrfOperator& op, const PureState& psi) {
  if (op.n_qubits != psi.n_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "frame operator and state have different sizes");
  }
  const auto amps = psi.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
  const Eigen::VectorXcd out = op.matrix * v;
  return PureState::normalized(std::vector<Complex>(out.data(), out.data() + out.size()));
}

}  // namespace qrf
