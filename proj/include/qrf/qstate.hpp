#pragma once

// N-qubit pure states and density matrices.
//
// Basis ordering is big-endian: qubit 0 is the most significant bit of the
// basis index, so amplitude k of a 3-qubit state is the coefficient of
// |k₂k₁k₀⟩ read left to right as |ABC⟩.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qrf {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kCompareTolerance = 1e-10;
// Eigenvalues in [-kEigenClamp, 0) are treated as exact zeros.
inline constexpr double kEigenClamp = 1e-12;
inline constexpr int kMaxQubits = 12;

// Value of `qubit` (0 = leftmost) in basis index `index` of an n-qubit register.
constexpr int bit_of(std::size_t index, int qubit, int n_qubits) noexcept {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1U);
}

class PureState {
 public:
  // Scales `amps` to unit norm. Throws NotPowerOfTwo or, for a zero vector,
  // NormOutOfTolerance.
  static PureState normalized(std::vector<Complex> amps);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

 private:
  PureState(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<Complex> amps_;
};

class DensityMatrix {
 public:
  // Throws NotPowerOfTwo unless `m` is square with power-of-two dimension ≥ 2.
  explicit DensityMatrix(Eigen::MatrixXcd m);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  // Eigenvalues of the Hermitian part (M + M†)/2, ascending.
  Eigen::VectorXd eigenvalues() const;

  // Hermitian, unit trace and positive semidefinite within `tol`.
  bool is_valid(double tol = kCompareTolerance) const;

  // Largest off-diagonal modulus.
  double max_offdiagonal() const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd m_;
};

// Accepts `amps` when |‖amps‖ − 1| ≤ tol and returns the renormalized state.
PureState state_from_amplitudes(std::vector<Complex> amps, double tol = kNormTolerance);

DensityMatrix density_matrix(const PureState& psi);

// Reduced state on `keep` (any order, no duplicates); the result lists the
// kept qubits in their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

// Maximal (p = 1/2) per-qubit dephasing in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

// Pure state with amplitudes √ρ_ii. Throws NotDiagonal if any off-diagonal
// modulus exceeds `tol`.
PureState purify_diagonal(const DensityMatrix& rho, double tol = kCompareTolerance);

}  // namespace qrf
