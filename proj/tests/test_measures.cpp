#include <doctest.h>

#include <cmath>

#include "qrf/error.hpp"
#include "qrf/measures.hpp"
#include "test_support.hpp"

using namespace qrf;
using qrf::testing::make_rng;
using qrf::testing::random_state;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

PureState bell() { return state_from_amplitudes({kH, 0, 0, kH}); }

PureState rindler(double r) {
  return state_from_amplitudes({std::cos(r) * kH, 0, 0, std::sin(r) * kH, 0, 0, kH, 0});
}

DensityMatrix diag2(double p0, double p1) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = p0;
  m(1, 1) = p1;
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("von_neumann_entropy") {
  CHECK(von_neumann_entropy(density_matrix(bell())) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diag2(0.5, 0.5)) == doctest::Approx(1.0));
  // diag(½cos²r, ½ + ½sin²r) at r = π/4 is diag(¼, ¾); −¼log₂¼ − ¾log₂¾.
  const double r = M_PI / 4;
  CHECK(von_neumann_entropy(diag2(0.5 * std::cos(r) * std::cos(r),
                                  0.5 + 0.5 * std::sin(r) * std::sin(r))) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
}

TEST_CASE("entanglement") {
  const Bipartition ab{{0}, {1}};
  CHECK(entanglement(bell(), ab, MeasurePair::Entropy) == doctest::Approx(1.0));
  CHECK(entanglement(bell(), ab, MeasurePair::Linear) == doctest::Approx(0.5));

  const Bipartition a_rest{{0}, {1, 2}};
  for (double r : {0.0, 0.1, 0.4, 0.7, M_PI / 4}) {
    CAPTURE(r);
    CHECK(entanglement(rindler(r), a_rest, MeasurePair::Entropy) == doctest::Approx(1.0));
    CHECK(entanglement(rindler(r), a_rest, MeasurePair::Linear) == doctest::Approx(0.5));
  }

  try {
    entanglement(bell(), Bipartition{{0}, {0}}, MeasurePair::Entropy);
    FAIL("expected InvalidBipartition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBipartition);
  }
  CHECK_THROWS_AS(entanglement(rindler(0.2), Bipartition{{0}, {1}}, MeasurePair::Entropy), Error);
  CHECK_THROWS_AS(entanglement(bell(), Bipartition{{}, {0, 1}}, MeasurePair::Entropy), Error);
}

TEST_CASE("coherence") {
  CHECK(coherence(diag2(0.3, 0.7), MeasurePair::Entropy) == 0.0);
  CHECK(coherence(diag2(0.3, 0.7), MeasurePair::Linear) == 0.0);
  const auto plus = density_matrix(state_from_amplitudes({kH, kH}));
  CHECK(coherence(plus, MeasurePair::Entropy) == doctest::Approx(1.0));
  CHECK(coherence(plus, MeasurePair::Linear) == doctest::Approx(0.5));
}

TEST_CASE("mutual_information") {
  const Bipartition ab{{0}, {1}};
  // |0⟩⊗|+⟩
  CHECK(mutual_information(density_matrix(state_from_amplitudes({kH, kH, 0, 0})), ab) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mutual_information(density_matrix(bell()), ab) == doctest::Approx(2.0));

  // ρ_{RR̄} at r = π/4 gives (3/2)(2 − log₂3).
  const auto rr = partial_trace(density_matrix(rindler(M_PI / 4)), {1, 2});
  CHECK(mutual_information(rr, ab) == doctest::Approx(1.5 * (2.0 - std::log2(3.0))).epsilon(1e-12));
}

TEST_CASE("measure properties on random states") {
  auto rng = make_rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const auto psi = random_state(rng, n);
    std::vector<int> left, right;
    for (int q = 0; q < n; ++q) ((trial >> q) & 1 ? left : right).push_back(q);
    if (left.empty()) left.push_back(right.back()), right.pop_back();
    if (right.empty()) right.push_back(left.back()), left.pop_back();
    const Bipartition split{left, right};
    const Bipartition flipped{right, left};

    for (MeasurePair m : {MeasurePair::Entropy, MeasurePair::Linear}) {
      CHECK(std::abs(entanglement(psi, split, m) - entanglement(psi, flipped, m)) <= 1e-10);
    }

    const double e = entanglement(psi, split, MeasurePair::Entropy);
    CHECK(e >= 0.0);
    CHECK(e <= static_cast<double>(std::min(left.size(), right.size())) + 1e-12);

    const auto rho = density_matrix(psi);
    const Bipartition whole{left, right};
    CHECK(std::abs(mutual_information(rho, whole) - 2.0 * e) <= 1e-10);

    // Single-qubit marginal: Eigen-based entropy agrees with the closed 2×2 form.
    const auto one = partial_trace(rho, {0});
    CHECK(std::abs(von_neumann_entropy(one) -
                   qrf::testing::entropy_2x2(Eigen::Matrix2cd(one.matrix()))) <= 1e-12);

    const double c = coherence(one, MeasurePair::Entropy);
    CHECK(c >= 0.0);
    if (one.max_offdiagonal() > 1e-6) CHECK(c > 0.0);
  }
}

TEST_CASE("coherence vanishes exactly for diagonal inputs") {
  auto rng = make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = dephase(density_matrix(random_state(rng, 1 + trial % 3)));
    CHECK(rho.max_offdiagonal() <= 1e-10);
    CHECK(coherence(rho, MeasurePair::Entropy) <= 1e-12);
    CHECK(coherence(rho, MeasurePair::Linear) == 0.0);
  }
}
