#include "qrf/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qrf/error.hpp"
#include "qrf/kernels.hpp"

namespace qrf {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

std::span<const Complex> entries(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  return {m.data(), static_cast<std::size_t>(m.size())};
}

}  // namespace

std::string_view to_string(MeasurePair m) noexcept {
  return m == MeasurePair::Entropy ? "entropy" : "linear";
}

void validate(const Bipartition& split, int n_qubits) {
  if (split.left.empty() || split.right.empty()) {
    throw Error(ErrorKind::InvalidBipartition, "both sides of a bipartition must be nonempty");
  }
  std::vector<int> all(split.left);
  all.insert(all.end(), split.right.begin(), split.right.end());
  std::sort(all.begin(), all.end());
  bool ok = static_cast<int>(all.size()) == n_qubits;
  for (int i = 0; ok && i < n_qubits; ++i) ok = all[static_cast<std::size_t>(i)] == i;
  if (!ok) {
    throw Error(ErrorKind::InvalidBipartition,
                "bipartition must split all qubits into disjoint sets");
  }
}

double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda >= -kEigenClamp) s -= xlog2x(std::max(lambda, 0.0));
  }
  return std::max(s, 0.0);
}

double linear_entropy(const DensityMatrix& rho) {
  // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ.
  return std::max(1.0 - kernels::sum_norm_sq(entries(rho)), 0.0);
}

double entanglement(const PureState& psi, const Bipartition& split, MeasurePair m) {
  validate(split, psi.n_qubits());
  const DensityMatrix reduced = partial_trace(density_matrix(psi), split.left);
  return m == MeasurePair::Entropy ? von_neumann_entropy(reduced) : linear_entropy(reduced);
}

double coherence(const DensityMatrix& rho, MeasurePair m) {
  if (m == MeasurePair::Entropy) {
    return std::max(von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho), 0.0);
  }
  const Eigen::VectorXcd diag = rho.matrix().diagonal();
  const double on_diag = kernels::sum_norm_sq({diag.data(), static_cast<std::size_t>(diag.size())});
  return std::max(kernels::sum_norm_sq(entries(rho)) - on_diag, 0.0);
}

double mutual_information(const DensityMatrix& rho, const Bipartition& split) {
  validate(split, rho.n_qubits());
  return von_neumann_entropy(partial_trace(rho, split.left)) +
         von_neumann_entropy(partial_trace(rho, split.right)) - von_neumann_entropy(rho);
}

}  // namespace qrf
