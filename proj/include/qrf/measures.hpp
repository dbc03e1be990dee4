#pragma once

// Entanglement, coherence and mutual-information functionals. All entropies
// are in bits.

#include <string_view>
#include <vector>

#include "qrf/qstate.hpp"

namespace qrf {

// Entanglement/coherence measures always travel in matched pairs:
//   Entropy: entanglement entropy with relative entropy of coherence
//   Linear:  linear entropy with ℓ²-norm of coherence
enum class MeasurePair { Entropy, Linear };

std::string_view to_string(MeasurePair m) noexcept;

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

// Throws InvalidBipartition unless left/right are nonempty, disjoint and
// together cover [0, n_qubits).
void validate(const Bipartition& split, int n_qubits);

// −p log₂ p − (1−p) log₂(1−p), with 0·log 0 = 0.
double binary_entropy(double p);

double von_neumann_entropy(const DensityMatrix& rho);

// 1 − Tr ρ²
double linear_entropy(const DensityMatrix& rho);

double entanglement(const PureState& psi, const Bipartition& split, MeasurePair m);

// Entropy: S(ρ_d) − S(ρ).  Linear: Σ_{i≠j} |ρ_ij|².
double coherence(const DensityMatrix& rho, MeasurePair m);

// S(ρ_left) + S(ρ_right) − S(ρ) where `split` partitions the qubits of ρ.
double mutual_information(const DensityMatrix& rho, const Bipartition& split);

}  // namespace qrf
