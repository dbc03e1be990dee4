#pragma once

// Entanglement-transference constraints on 3-qubit pure states:
//
//   E^(α)_{β,γ} + C^(α)_β = E_{γ,αβ}
//
// for the three cyclic role assignments (α, β, γ) ∈ {(A,B,C), (B,C,A), (C,A,B)},
// plus the weaker corollary E^(α)_{β,γ} + C^(α)_β = E^(β)_{α,γ} + C^(β)_α and
// the closed-form X/Y/L expressions in the eight amplitudes a…h.

#include <array>
#include <string_view>

#include "qrf/measures.hpp"
#include "qrf/qstate.hpp"

namespace qrf {

inline constexpr double kSatisfactionTolerance = 1e-9;
inline constexpr double kSupportThreshold = 1e-12;

enum class ConstraintId { C1, C2, C3 };
inline constexpr std::array<ConstraintId, 3> kAllConstraints{ConstraintId::C1, ConstraintId::C2,
                                                             ConstraintId::C3};

std::string_view to_string(ConstraintId c) noexcept;

// Qubit positions playing α (perspective), β (coherent subsystem) and
// γ (stands alone in the global bipartition).
struct ConstraintRoles {
  int perspective;
  int coherent;
  int standalone;
};

ConstraintRoles roles(ConstraintId c) noexcept;

enum class ParityClass { Even, Odd, Neither };

std::string_view to_string(ParityClass p) noexcept;

// Even: support ⊆ {000, 011, 101, 110}. Odd: support ⊆ {001, 010, 100, 111}.
ParityClass parity_class(const PureState& psi);

// E^(α) of the assigned 2-qubit perspectival state.
double perspectival_entanglement(const PureState& psi, int perspective, MeasurePair m);

// C^(α)_β: coherence of qubit `subsystem` (a global label ≠ perspective)
// in the perspectival state of `perspective`.
double perspectival_coherence(const PureState& psi, int perspective, int subsystem, MeasurePair m);

// E_{γ, rest}
double global_entanglement(const PureState& psi, int standalone, MeasurePair m);

struct Sides {
  double lhs;
  double rhs;
};

struct ConstraintReport {
  ConstraintId constraint;
  double lhs;
  double rhs;
  double residual;
  bool satisfied;
};

ConstraintReport make_report(ConstraintId c, Sides sides, double tol);

Sides transference_sides(const PureState& psi, ConstraintId c, MeasurePair m);

std::array<ConstraintReport, 3> check_transference(const PureState& psi, MeasurePair m,
                                                   double tol = kSatisfactionTolerance);

// Corollary pairs share the (α, β) of the matching constraint: C1 checks
// α=A, β=B; C2 checks B, C; C3 checks C, A.
Sides corollary_sides(const PureState& psi, ConstraintId c, MeasurePair m);

std::array<ConstraintReport, 3> check_corollary(const PureState& psi, MeasurePair m,
                                                double tol = kSatisfactionTolerance);

struct XylTriple {
  double x;
  double y;
  double l;
};

XylTriple xyl_closed_form(const PureState& psi, ConstraintId c, MeasurePair m);

// Transference quantities rebuilt from (X, Y, L).
struct XylQuantities {
  double global_entanglement;
  double perspectival_entanglement;
  double perspectival_coherence;
};

XylQuantities xyl_quantities(const XylTriple& xyl, MeasurePair m);

// Entropy: L = (1 ± X)/2.  Linear: L = X.
bool condition_check(const PureState& psi, ConstraintId c, MeasurePair m,
                     double tol = kSatisfactionTolerance);

}  // namespace qrf
