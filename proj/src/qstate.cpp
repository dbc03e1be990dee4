#include "qrf/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qrf/error.hpp"
#include "qrf/kernels.hpp"

namespace qrf {

namespace {

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(ErrorKind::NotPowerOfTwo,
                "dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(n) + " qubits exceeds the supported maximum of " +
                    std::to_string(kMaxQubits));
  }
  return n;
}

}  // namespace

PureState PureState::normalized(std::vector<Complex> amps) {
  const int n = qubits_for_dim(amps.size());
  const double norm = std::sqrt(kernels::sum_norm_sq(amps));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::NormOutOfTolerance, "cannot normalize a zero or non-finite vector");
  }
  for (auto& a : amps) a /= norm;
  return PureState(n, std::move(amps));
}

PureState state_from_amplitudes(std::vector<Complex> amps, double tol) {
  qubits_for_dim(amps.size());
  const double norm = std::sqrt(kernels::sum_norm_sq(amps));
  if (!(std::abs(norm - 1.0) <= tol)) {
    throw Error(ErrorKind::NormOutOfTolerance,
                "state norm " + std::to_string(norm) + " is outside tolerance of 1");
  }
  return PureState::normalized(std::move(amps));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : n_qubits_(0), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorKind::NotPowerOfTwo, "density matrix must be square");
  }
  n_qubits_ = qubits_for_dim(static_cast<std::size_t>(m_.rows()));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  const Eigen::MatrixXcd herm = (m_ + m_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool DensityMatrix::is_valid(double tol) const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > tol) return false;
  return eigenvalues().minCoeff() >= -tol;
}

double DensityMatrix::max_offdiagonal() const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < dim(); ++j) {
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (i != j) worst = std::max(worst, std::abs(m_(i, j)));
    }
  }
  return worst;
}

DensityMatrix density_matrix(const PureState& psi) {
  const auto d = static_cast<Eigen::Index>(psi.dim());
  Eigen::MatrixXcd m(d, d);
  const auto amps = psi.amplitudes();
  // Column-major: column j is conj(ψ_j)·ψ.
  for (Eigen::Index j = 0; j < d; ++j) {
    kernels::scale(std::conj(amps[j]), amps,
                   std::span<Complex>(m.col(j).data(), static_cast<std::size_t>(d)));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) throw Error(ErrorKind::EmptyKeepSet, "partial trace needs at least one kept qubit");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw Error(ErrorKind::InvalidSubsystem, "duplicate subsystem in keep set");
  }
  if (kept.front() < 0 || kept.back() >= n) {
    throw Error(ErrorKind::InvalidSubsystem, "subsystem index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t dt = std::size_t{1} << nt;

  // Scatter a reduced index over a qubit list into a full basis index.
  auto spread = [n](std::size_t local, const std::vector<int>& qubits) {
    std::size_t full = 0;
    const int m = static_cast<int>(qubits.size());
    for (int k = 0; k < m; ++k) {
      if ((local >> (m - 1 - k)) & 1U) full |= std::size_t{1} << (n - 1 - qubits[k]);
    }
    return full;
  };
  std::vector<std::size_t> kept_offset(dk), traced_offset(dt);
  for (std::size_t k = 0; k < dk; ++k) kept_offset[k] = spread(k, kept);
  for (std::size_t t = 0; t < dt; ++t) traced_offset[t] = spread(t, traced);

  const auto& m = rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (std::size_t j = 0; j < dk; ++j) {
    for (std::size_t i = 0; i < dk; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < dt; ++t) {
        acc += m(static_cast<Eigen::Index>(kept_offset[i] | traced_offset[t]),
                 static_cast<Eigen::Index>(kept_offset[j] | traced_offset[t]));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  diag.diagonal() = rho.matrix().diagonal();
  return DensityMatrix(std::move(diag));
}

PureState purify_diagonal(const DensityMatrix& rho, double tol) {
  if (rho.max_offdiagonal() > tol) {
    throw Error(ErrorKind::NotDiagonal, "purification requires a diagonal density matrix");
  }
  std::vector<Complex> amps(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    amps[static_cast<std::size_t>(i)] = std::sqrt(std::max(rho(i, i).real(), 0.0));
  }
  return PureState::normalized(std::move(amps));
}

}  // namespace qrf
