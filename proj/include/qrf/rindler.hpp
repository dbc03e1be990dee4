#pragma once

// Fermionic entanglement degradation seen from perspectival frames.
//
// Alice (inertial), Rob (uniformly accelerated, right Rindler wedge) and
// anti-Rob (left wedge) occupy qubits 0, 1, 2. The shared state is
//
//   |φ_r⟩ = (cos r |000⟩ + sin r |011⟩ + |110⟩) / √2,   tan r = exp(−πω/a).

#include <array>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "qrf/measures.hpp"
#include "qrf/qstate.hpp"

namespace qrf::rindler {

inline constexpr double kMaxR = std::numbers::pi / 4.0;

// Squeezing angle r ∈ [0, π/4]. The upper end is the infinite-acceleration limit.
class AccelerationParameter {
 public:
  // Throws GridOutOfDomain outside [0, π/4].
  static AccelerationParameter from_r(double r);

  double r() const noexcept { return r_; }

 private:
  explicit AccelerationParameter(double r) : r_(r) {}
  double r_;
};

// r = arctan(exp(−πω/a)). Throws NonPositiveInput unless a, ω > 0.
AccelerationParameter r_from_acceleration(double acceleration, double omega);

enum class Observer { Alice = 0, Rob = 1, AntiRob = 2 };

constexpr int qubit_of(Observer o) noexcept { return static_cast<int>(o); }

PureState global_state(AccelerationParameter r);

// Closed-form two-qubit states seen by each observer:
//   Alice:   (cos r|00⟩ + sin r|11⟩ + |01⟩)/√2   over (R, R̄)
//   Rob:     (cos r|00⟩ + sin r|10⟩ + |01⟩)/√2   over (A, R̄)
//   AntiRob: (cos r|00⟩ + sin r|10⟩ + |11⟩)/√2   over (A, R)
PureState perspectival_state(AccelerationParameter r, Observer obs);

// The six entanglement rows characterizing |φ_r⟩.
enum class TableQuantity {
  PerspA_R_Rbar,   // E^(A)_{R,R̄}
  PerspR_A_Rbar,   // E^(R)_{A,R̄}
  PerspRbar_A_R,   // E^(R̄)_{A,R}
  GlobalRbar_AR,   // E_{R̄,AR}
  GlobalR_ARbar,   // E_{R,AR̄}
  GlobalA_RRbar,   // E_{A,RR̄}
};

inline constexpr std::array<TableQuantity, 6> kAllTableQuantities{
    TableQuantity::PerspA_R_Rbar, TableQuantity::PerspR_A_Rbar, TableQuantity::PerspRbar_A_R,
    TableQuantity::GlobalRbar_AR, TableQuantity::GlobalR_ARbar, TableQuantity::GlobalA_RRbar};

std::string_view to_string(TableQuantity q) noexcept;

// Throws UnknownQuantity for names other than those produced by to_string.
TableQuantity table_quantity_from_name(std::string_view name);

double closed_form_entanglement(AccelerationParameter r, TableQuantity q, MeasurePair m);

// Same quantity from density matrices of the assigned states.
double oracle_entanglement(AccelerationParameter r, TableQuantity q, MeasurePair m);

struct MutualInformation {
  double r_rbar;          // I_{R,R̄}
  double a_rbar;          // I_{A,R̄}
  double a_r;             // I_{A,R}
  double persp_a_r_rbar;  // I^(A)_{R,R̄}
  double persp_r_a_rbar;  // I^(R)_{A,R̄}
  double persp_rbar_a_r;  // I^(R̄)_{A,R}
};

// Global values from sums of table entropies, perspectival values as twice
// the perspectival entanglement entropy.
MutualInformation mutual_information_curves(AccelerationParameter r);

// Direct S(ρ_a) + S(ρ_b) − S(ρ_ab) on traced and perspectival states.
MutualInformation mutual_information_oracle(AccelerationParameter r);

struct SweepRecord {
  double r = 0.0;
  MeasurePair measures = MeasurePair::Entropy;

  double e_persp_a = 0.0;     // E^(A)_{R,R̄}
  double e_persp_r = 0.0;     // E^(R)_{A,R̄}
  double e_persp_rbar = 0.0;  // E^(R̄)_{A,R}

  double c_a_of_r = 0.0;      // C^(A)_R
  double c_a_of_rbar = 0.0;   // C^(A)_R̄
  double c_r_of_a = 0.0;      // C^(R)_A
  double c_r_of_rbar = 0.0;   // C^(R)_R̄
  double c_rbar_of_a = 0.0;   // C^(R̄)_A
  double c_rbar_of_r = 0.0;   // C^(R̄)_R

  double e_rbar_ar = 0.0;     // E_{R̄,AR}
  double e_r_arbar = 0.0;     // E_{R,AR̄}
  double e_a_rrbar = 0.0;     // E_{A,RR̄}

  MutualInformation mi{};

  // Largest |closed form − oracle| over every field of the row.
  double max_residual = 0.0;
};

std::vector<double> linspace(double start, double stop, std::size_t count);

// Throws GridOutOfDomain for an empty, unsorted or out-of-range grid. Points
// may be evaluated concurrently; output order follows the grid.
std::vector<SweepRecord> sweep(std::span<const double> grid, MeasurePair m);

std::span<const std::string_view> sweep_columns() noexcept;

// RFC-4180 CSV with a header row, LF line endings and 12 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

}  // namespace qrf::rindler
