#include "qrf/rindler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "qrf/error.hpp"
#include "qrf/perspective.hpp"
#include "qrf/transference.hpp"

namespace qrf::rindler {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double neg_xlog2x(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// −Σ_j p_j log₂ p_j over p_j = (1 ± s)/2.
double split_entropy(double s) {
  return neg_xlog2x((1.0 - s) / 2.0) + neg_xlog2x((1.0 + s) / 2.0);
}

PureState two_qubit(double a00, double a01, double a10, double a11) {
  return PureState::normalized({a00, a01, a10, a11});
}

}  // namespace

AccelerationParameter AccelerationParameter::from_r(double r) {
  if (!(r >= 0.0 && r <= kMaxR)) {
    throw Error(ErrorKind::GridOutOfDomain,
                "acceleration parameter r = " + std::to_string(r) + " outside [0, pi/4]");
  }
  return AccelerationParameter(r);
}

AccelerationParameter r_from_acceleration(double acceleration, double omega) {
  if (!(acceleration > 0.0) || !(omega > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, "acceleration and frequency must be positive");
  }
  return AccelerationParameter::from_r(std::atan(std::exp(-std::numbers::pi * omega / acceleration)));
}

PureState global_state(AccelerationParameter r) {
  const double c = std::cos(r.r()) * kInvSqrt2;
  const double s = std::sin(r.r()) * kInvSqrt2;
  std::vector<Complex> amps(8, 0.0);
  amps[0b000] = c;
  amps[0b011] = s;
  amps[0b110] = kInvSqrt2;
  return PureState::normalized(std::move(amps));
}

PureState perspectival_state(AccelerationParameter r, Observer obs) {
  const double c = std::cos(r.r()) * kInvSqrt2;
  const double s = std::sin(r.r()) * kInvSqrt2;
  switch (obs) {
    case Observer::Alice: return two_qubit(c, kInvSqrt2, 0.0, s);
    case Observer::Rob: return two_qubit(c, kInvSqrt2, s, 0.0);
    case Observer::AntiRob: return two_qubit(c, 0.0, s, kInvSqrt2);
  }
  return two_qubit(c, kInvSqrt2, 0.0, s);
}

std::string_view to_string(TableQuantity q) noexcept {
  switch (q) {
    case TableQuantity::PerspA_R_Rbar: return "E_persp_A_R_Rbar";
    case TableQuantity::PerspR_A_Rbar: return "E_persp_R_A_Rbar";
    case TableQuantity::PerspRbar_A_R: return "E_persp_Rbar_A_R";
    case TableQuantity::GlobalRbar_AR: return "E_Rbar_AR";
    case TableQuantity::GlobalR_ARbar: return "E_R_ARbar";
    case TableQuantity::GlobalA_RRbar: return "E_A_RRbar";
  }
  return "?";
}

TableQuantity table_quantity_from_name(std::string_view name) {
  for (TableQuantity q : kAllTableQuantities) {
    if (to_string(q) == name) return q;
  }
  throw Error(ErrorKind::UnknownQuantity, "unknown table quantity '" + std::string(name) + "'");
}

double closed_form_entanglement(AccelerationParameter r, TableQuantity q, MeasurePair m) {
  const double x = r.r();
  const double c = std::cos(x), s = std::sin(x);
  const double c2 = c * c, s2 = s * s;
  if (m == MeasurePair::Entropy) {
    switch (q) {
      case TableQuantity::PerspA_R_Rbar:
        return split_entropy(std::sqrt(7.0 + std::cos(4.0 * x)) / (2.0 * std::numbers::sqrt2));
      case TableQuantity::PerspR_A_Rbar: return split_entropy(c);
      case TableQuantity::PerspRbar_A_R: return split_entropy(s);
      case TableQuantity::GlobalRbar_AR: return split_entropy(c2);
      case TableQuantity::GlobalR_ARbar: return neg_xlog2x(c2 / 2.0) + neg_xlog2x(1.0 - c2 / 2.0);
      case TableQuantity::GlobalA_RRbar: return 1.0;
    }
  } else {
    switch (q) {
      case TableQuantity::PerspA_R_Rbar: {
        const double s2r = std::sin(2.0 * x);
        return s2r * s2r / 8.0;
      }
      case TableQuantity::PerspR_A_Rbar: return s2 / 2.0;
      case TableQuantity::PerspRbar_A_R: return c2 / 2.0;
      case TableQuantity::GlobalRbar_AR: return s2 / 2.0 * (1.0 + c2);
      case TableQuantity::GlobalR_ARbar: return c2 * (1.0 - c2 / 2.0);
      case TableQuantity::GlobalA_RRbar: return 0.5;
    }
  }
  throw Error(ErrorKind::UnknownQuantity, "unknown table quantity");
}

double oracle_entanglement(AccelerationParameter r, TableQuantity q, MeasurePair m) {
  const PureState psi = global_state(r);
  switch (q) {
    case TableQuantity::PerspA_R_Rbar: return perspectival_entanglement(psi, 0, m);
    case TableQuantity::PerspR_A_Rbar: return perspectival_entanglement(psi, 1, m);
    case TableQuantity::PerspRbar_A_R: return perspectival_entanglement(psi, 2, m);
    case TableQuantity::GlobalRbar_AR: return global_entanglement(psi, 2, m);
    case TableQuantity::GlobalR_ARbar: return global_entanglement(psi, 1, m);
    case TableQuantity::GlobalA_RRbar: return global_entanglement(psi, 0, m);
  }
  throw Error(ErrorKind::UnknownQuantity, "unknown table quantity");
}

MutualInformation mutual_information_curves(AccelerationParameter r) {
  const auto e = [r](TableQuantity q) { return closed_form_entanglement(r, q, MeasurePair::Entropy); };
  const double rbar = e(TableQuantity::GlobalRbar_AR);
  const double rob = e(TableQuantity::GlobalR_ARbar);
  const double alice = e(TableQuantity::GlobalA_RRbar);
  return MutualInformation{
      rbar + rob - alice,
      alice + rbar - rob,
      rob + alice - rbar,
      2.0 * e(TableQuantity::PerspA_R_Rbar),
      2.0 * e(TableQuantity::PerspR_A_Rbar),
      2.0 * e(TableQuantity::PerspRbar_A_R),
  };
}

MutualInformation mutual_information_oracle(AccelerationParameter r) {
  const PureState psi = global_state(r);
  const DensityMatrix rho = density_matrix(psi);
  const Bipartition pair{{0}, {1}};
  const auto persp = [&](int observer) {
    return mutual_information(density_matrix(assign_perspective(psi, observer)), pair);
  };
  return MutualInformation{
      mutual_information(partial_trace(rho, {1, 2}), pair),
      mutual_information(partial_trace(rho, {0, 2}), pair),
      mutual_information(partial_trace(rho, {0, 1}), pair),
      persp(0),
      persp(1),
      persp(2),
  };
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = i + 1 == count ? stop : start + (stop - start) * t;
  }
  return out;
}

namespace {

SweepRecord sweep_point(double r_value, MeasurePair m) {
  const auto r = AccelerationParameter::from_r(r_value);
  const PureState psi = global_state(r);

  SweepRecord rec;
  rec.r = r_value;
  rec.measures = m;
  rec.e_persp_a = perspectival_entanglement(psi, 0, m);
  rec.e_persp_r = perspectival_entanglement(psi, 1, m);
  rec.e_persp_rbar = perspectival_entanglement(psi, 2, m);
  rec.c_a_of_r = perspectival_coherence(psi, 0, 1, m);
  rec.c_a_of_rbar = perspectival_coherence(psi, 0, 2, m);
  rec.c_r_of_a = perspectival_coherence(psi, 1, 0, m);
  rec.c_r_of_rbar = perspectival_coherence(psi, 1, 2, m);
  rec.c_rbar_of_a = perspectival_coherence(psi, 2, 0, m);
  rec.c_rbar_of_r = perspectival_coherence(psi, 2, 1, m);
  rec.e_rbar_ar = global_entanglement(psi, 2, m);
  rec.e_r_arbar = global_entanglement(psi, 1, m);
  rec.e_a_rrbar = global_entanglement(psi, 0, m);
  rec.mi = mutual_information_oracle(r);

  // Closed forms: table rows, coherences as E_{γ,αβ} − E^(α), and the
  // mutual-information combinations.
  const auto cf = [&](TableQuantity q) { return closed_form_entanglement(r, q, m); };
  const double pa = cf(TableQuantity::PerspA_R_Rbar);
  const double pr = cf(TableQuantity::PerspR_A_Rbar);
  const double prb = cf(TableQuantity::PerspRbar_A_R);
  const double grb = cf(TableQuantity::GlobalRbar_AR);
  const double gr = cf(TableQuantity::GlobalR_ARbar);
  const double ga = cf(TableQuantity::GlobalA_RRbar);
  const MutualInformation mi = mutual_information_curves(r);

  const std::array<std::pair<double, double>, 18> checks{{
      {rec.e_persp_a, pa},
      {rec.e_persp_r, pr},
      {rec.e_persp_rbar, prb},
      {rec.c_a_of_r, grb - pa},
      {rec.c_a_of_rbar, gr - pa},
      {rec.c_r_of_a, grb - pr},
      {rec.c_r_of_rbar, ga - pr},
      {rec.c_rbar_of_a, gr - prb},
      {rec.c_rbar_of_r, ga - prb},
      {rec.e_rbar_ar, grb},
      {rec.e_r_arbar, gr},
      {rec.e_a_rrbar, ga},
      {rec.mi.r_rbar, mi.r_rbar},
      {rec.mi.a_rbar, mi.a_rbar},
      {rec.mi.a_r, mi.a_r},
      {rec.mi.persp_a_r_rbar, mi.persp_a_r_rbar},
      {rec.mi.persp_r_a_rbar, mi.persp_r_a_rbar},
      {rec.mi.persp_rbar_a_r, mi.persp_rbar_a_r},
  }};
  for (const auto& [oracle, closed] : checks) {
    rec.max_residual = std::max(rec.max_residual, std::abs(oracle - closed));
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep(std::span<const double> grid, MeasurePair m) {
  if (grid.empty()) throw Error(ErrorKind::GridOutOfDomain, "sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= kMaxR)) {
      throw Error(ErrorKind::GridOutOfDomain, "grid point outside [0, pi/4]");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      throw Error(ErrorKind::GridOutOfDomain, "grid must be ascending");
    }
  }

  std::vector<SweepRecord> out(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) out[i] = sweep_point(grid[i], m);
      });
    }
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 21> kColumns{
    "r",           "measures",         "E_persp_A_R_Rbar", "E_persp_R_A_Rbar",  "E_persp_Rbar_A_R",
    "C_A_of_R",    "C_A_of_Rbar",      "C_R_of_A",         "C_R_of_Rbar",       "C_Rbar_of_A",
    "C_Rbar_of_R", "E_Rbar_AR",        "E_R_ARbar",        "E_A_RRbar",         "MI_R_Rbar",
    "MI_A_Rbar",   "MI_A_R",           "MI_persp_A_R_Rbar", "MI_persp_R_A_Rbar", "MI_persp_Rbar_A_R",
    "max_residual"};

void put_number(std::ostream& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  out.write(buf, res.ptr - buf);
}

}  // namespace

std::span<const std::string_view> sweep_columns() noexcept { return kColumns; }

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out << ',';
    out << kColumns[i];
  }
  out << '\n';
  for (const SweepRecord& rec : records) {
    const std::array<double, 19> values{
        rec.e_persp_a,   rec.e_persp_r,       rec.e_persp_rbar,      rec.c_a_of_r,
        rec.c_a_of_rbar, rec.c_r_of_a,        rec.c_r_of_rbar,       rec.c_rbar_of_a,
        rec.c_rbar_of_r, rec.e_rbar_ar,       rec.e_r_arbar,         rec.e_a_rrbar,
        rec.mi.r_rbar,   rec.mi.a_rbar,       rec.mi.a_r,            rec.mi.persp_a_r_rbar,
        rec.mi.persp_r_a_rbar, rec.mi.persp_rbar_a_r, rec.max_residual};
    put_number(out, rec.r);
    out << ',' << to_string(rec.measures);
    for (double v : values) {
      out << ',';
      put_number(out, v);
    }
    out << '\n';
  }
}

}  // namespace qrf::rindler
