#include "qrf/transference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qrf/error.hpp"
#include "qrf/perspective.hpp"

namespace qrf {

namespace {

void require_three_qubits(const PureState& psi) {
  if (psi.n_qubits() != 3) {
    throw Error(ErrorKind::WrongQubitCount, "transference is defined for 3-qubit states");
  }
}

// Position of global qubit `q` once `perspective` has been removed.
int local_position(int q, int perspective) { return q < perspective ? q : q - 1; }

}  // namespace

std::string_view to_string(ConstraintId c) noexcept {
  switch (c) {
    case ConstraintId::C1: return "C1";
    case ConstraintId::C2: return "C2";
    case ConstraintId::C3: return "C3";
  }
  return "?";
}

ConstraintRoles roles(ConstraintId c) noexcept {
  switch (c) {
    case ConstraintId::C1: return {0, 1, 2};
    case ConstraintId::C2: return {1, 2, 0};
    case ConstraintId::C3: return {2, 0, 1};
  }
  return {0, 1, 2};
}

std::string_view to_string(ParityClass p) noexcept {
  switch (p) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    case ParityClass::Neither: return "neither";
  }
  return "?";
}

ParityClass parity_class(const PureState& psi) {
  require_three_qubits(psi);
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    if (std::abs(psi[b]) <= kSupportThreshold) continue;
    (std::popcount(b) % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && !has_odd) return ParityClass::Even;
  if (has_odd && !has_even) return ParityClass::Odd;
  return ParityClass::Neither;
}

double perspectival_entanglement(const PureState& psi, int perspective, MeasurePair m) {
  require_three_qubits(psi);
  return entanglement(assign_perspective(psi, perspective), Bipartition{{0}, {1}}, m);
}

double perspectival_coherence(const PureState& psi, int perspective, int subsystem,
                              MeasurePair m) {
  require_three_qubits(psi);
  if (subsystem == perspective || subsystem < 0 || subsystem > 2) {
    throw Error(ErrorKind::InvalidSubsystem, "coherent subsystem must differ from the perspective");
  }
  const DensityMatrix rho = density_matrix(assign_perspective(psi, perspective));
  return coherence(partial_trace(rho, {local_position(subsystem, perspective)}), m);
}

double global_entanglement(const PureState& psi, int standalone, MeasurePair m) {
  require_three_qubits(psi);
  Bipartition split{{standalone}, {}};
  for (int q = 0; q < 3; ++q) {
    if (q != standalone) split.right.push_back(q);
  }
  return entanglement(psi, split, m);
}

ConstraintReport make_report(ConstraintId c, Sides sides, double tol) {
  const double residual = std::abs(sides.lhs - sides.rhs);
  return ConstraintReport{c, sides.lhs, sides.rhs, residual, residual <= tol};
}

Sides transference_sides(const PureState& psi, ConstraintId c, MeasurePair m) {
  require_three_qubits(psi);
  const auto [alpha, beta, gamma] = roles(c);
  const double lhs =
      perspectival_entanglement(psi, alpha, m) + perspectival_coherence(psi, alpha, beta, m);
  return Sides{lhs, global_entanglement(psi, gamma, m)};
}

std::array<ConstraintReport, 3> check_transference(const PureState& psi, MeasurePair m,
                                                   double tol) {
  std::array<ConstraintReport, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = make_report(kAllConstraints[i], transference_sides(psi, kAllConstraints[i], m), tol);
  }
  return out;
}

Sides corollary_sides(const PureState& psi, ConstraintId c, MeasurePair m) {
  require_three_qubits(psi);
  const auto [alpha, beta, gamma] = roles(c);
  const double lhs =
      perspectival_entanglement(psi, alpha, m) + perspectival_coherence(psi, alpha, beta, m);
  const double rhs =
      perspectival_entanglement(psi, beta, m) + perspectival_coherence(psi, beta, alpha, m);
  return Sides{lhs, rhs};
}

std::array<ConstraintReport, 3> check_corollary(const PureState& psi, MeasurePair m, double tol) {
  std::array<ConstraintReport, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = make_report(kAllConstraints[i], corollary_sides(psi, kAllConstraints[i], m), tol);
  }
  return out;
}

XylTriple xyl_closed_form(const PureState& psi, ConstraintId c, MeasurePair m) {
  require_three_qubits(psi);
  // Coefficients of |000⟩ … |111⟩.
  const Complex a = psi[0], b = psi[1], cc = psi[2], d = psi[3];
  const Complex e = psi[4], f = psi[5], g = psi[6], h = psi[7];
  const double a2 = std::norm(a), b2 = std::norm(b), c2 = std::norm(cc), d2 = std::norm(d);
  const double e2 = std::norm(e), f2 = std::norm(f), g2 = std::norm(g), h2 = std::norm(h);

  // Merged weights of the perspectival coefficients (shared by every perspective).
  const double ah = a2 + h2, bg = b2 + g2, cf = c2 + f2, de = d2 + e2;

  double zero_side = 0.0, one_side = 0.0, cross = 0.0;  // global marginal of γ
  double pair1 = 0.0, pair2 = 0.0;                      // perspectival 2×2 blocks
  double l_weight = 0.0, l_rest = 0.0;                  // β-diagonal weights
  switch (c) {
    case ConstraintId::C1:
      zero_side = a2 + c2 + e2 + g2;
      one_side = b2 + d2 + f2 + h2;
      cross = std::norm(a * std::conj(b) + cc * std::conj(d) + e * std::conj(f) + g * std::conj(h));
      l_weight = a2 + b2 + g2 + h2;
      l_rest = c2 + d2 + e2 + f2;
      break;
    case ConstraintId::C2:
      zero_side = a2 + b2 + c2 + d2;
      one_side = e2 + f2 + g2 + h2;
      cross = std::norm(a * std::conj(e) + b * std::conj(f) + cc * std::conj(g) + d * std::conj(h));
      l_weight = a2 + d2 + e2 + h2;
      l_rest = b2 + c2 + f2 + g2;
      break;
    case ConstraintId::C3:
      zero_side = a2 + b2 + e2 + f2;
      one_side = c2 + d2 + g2 + h2;
      cross = std::norm(a * std::conj(cc) + b * std::conj(d) + e * std::conj(g) + f * std::conj(h));
      l_weight = a2 + c2 + f2 + h2;
      l_rest = b2 + d2 + e2 + g2;
      break;
  }

  if (m == MeasurePair::Entropy) {
    double det_terms = 0.0;
    switch (c) {
      case ConstraintId::C1: det_terms = ah * de + bg * cf; break;
      case ConstraintId::C2: det_terms = ah * cf + bg * de; break;
      case ConstraintId::C3: det_terms = ah * bg + cf * de; break;
    }
    const double product = std::sqrt(ah * bg * cf * de);
    const double x = std::sqrt(std::max(1.0 - 4.0 * zero_side * one_side + 4.0 * cross, 0.0));
    const double y = std::sqrt(std::max(1.0 - 4.0 * det_terms + 8.0 * product, 0.0));
    return XylTriple{x, y, l_weight};
  }

  switch (c) {
    case ConstraintId::C1: pair1 = ah * cf; pair2 = bg * de; break;
    case ConstraintId::C2: pair1 = ah * bg; pair2 = cf * de; break;
    case ConstraintId::C3: pair1 = ah * de; pair2 = bg * cf; break;
  }
  const double x = zero_side * zero_side + 2.0 * cross + one_side * one_side;
  const double off = std::sqrt(pair1) + std::sqrt(pair2);
  const double l = l_weight * l_weight + l_rest * l_rest;
  return XylTriple{x, off * off, l};
}

XylQuantities xyl_quantities(const XylTriple& xyl, MeasurePair m) {
  if (m == MeasurePair::Entropy) {
    const double persp = binary_entropy((1.0 - xyl.y) / 2.0);
    return XylQuantities{binary_entropy((1.0 - xyl.x) / 2.0), persp,
                         binary_entropy(xyl.l) - persp};
  }
  return XylQuantities{1.0 - xyl.x, 1.0 - xyl.l - 2.0 * xyl.y, 2.0 * xyl.y};
}

bool condition_check(const PureState& psi, ConstraintId c, MeasurePair m, double tol) {
  const XylTriple t = xyl_closed_form(psi, c, m);
  if (m == MeasurePair::Entropy) {
    return std::abs(t.l - (1.0 - t.x) / 2.0) <= tol || std::abs(t.l - (1.0 + t.x) / 2.0) <= tol;
  }
  return std::abs(t.l - t.x) <= tol;
}

}  // namespace qrf
