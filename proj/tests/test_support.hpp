#pragma once

// Shared generators and brute-force oracles for the unit suites. The oracles
// deliberately avoid the library's own index arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qrf/qstate.hpp"

namespace qrf::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Complex Gaussian coefficients on `support`, renormalized.
inline PureState random_state(std::mt19937_64& rng, int n_qubits, std::span<const int> support) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << n_qubits, 0.0);
  for (int b : support) {
    const double re = normal(rng);
    const double im = normal(rng);
    amps[static_cast<std::size_t>(b)] = {re, im};
  }
  return PureState::normalized(std::move(amps));
}

inline PureState random_state(std::mt19937_64& rng, int n_qubits) {
  std::vector<int> all(std::size_t{1} << n_qubits);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return random_state(rng, n_qubits, all);
}

inline constexpr int kEvenSupport[] = {0b000, 0b011, 0b101, 0b110};
inline constexpr int kOddSupport[] = {0b001, 0b010, 0b100, 0b111};

inline std::string bits(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((index >> (n - 1 - k)) & 1U) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

inline std::size_t from_bits(const std::string& s) {
  std::size_t v = 0;
  for (char c : s) v = (v << 1) | static_cast<std::size_t>(c == '1');
  return v;
}

// Flip-merge written over bit strings.
inline std::vector<double> brute_flip_merge(const PureState& psi, int target) {
  const int n = psi.n_qubits();
  std::map<std::string, double> weight;
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    std::string s = bits(b, n);
    if (s[static_cast<std::size_t>(target)] == '1') {
      for (char& c : s) c = (c == '1') ? '0' : '1';
    }
    s.erase(static_cast<std::size_t>(target), 1);
    weight[s] += std::norm(psi[b]);
  }
  std::vector<double> out(psi.dim() / 2, 0.0);
  for (const auto& [s, w] : weight) out[from_bits(s)] = std::sqrt(w);
  return out;
}

// ρ_kept by summing over every (i, j) whose traced bits agree.
inline Eigen::MatrixXcd brute_partial_trace(const Eigen::MatrixXcd& rho, int n,
                                            std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  const std::size_t dk = std::size_t{1} << keep.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  const std::size_t d = std::size_t{1} << n;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::string si = bits(i, n), sj = bits(j, n);
      std::string ki, kj;
      bool same_traced = true;
      for (int q = 0; q < n; ++q) {
        const auto uq = static_cast<std::size_t>(q);
        if (std::find(keep.begin(), keep.end(), q) != keep.end()) {
          ki += si[uq];
          kj += sj[uq];
        } else if (si[uq] != sj[uq]) {
          same_traced = false;
        }
      }
      if (same_traced) {
        out(static_cast<Eigen::Index>(from_bits(ki)), static_cast<Eigen::Index>(from_bits(kj))) +=
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

// Entropy of a 2×2 Hermitian matrix from its characteristic polynomial.
inline double entropy_2x2(const Eigen::Matrix2cd& m) {
  const double t = m.trace().real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(t * t - 4.0 * det, 0.0));
  double s = 0.0;
  for (double lambda : {(t - disc) / 2.0, (t + disc) / 2.0}) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qrf::testing
