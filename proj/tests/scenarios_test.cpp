#include "qcausal/scenarios.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>

#include "gtest/gtest.h"
#include "qcausal/geometry.hpp"
#include "test_util.hpp"

using namespace qcausal;
using qcausal::testing::max_abs_diff;

namespace {

const Mat2 kId = Mat2::Identity();
const double kPi = std::numbers::pi;

Vec3 pv(const Scenario& s) { return pauli_vector(s, kId, kId).c; }

const Mat4& rho_of(const Scenario& s) { return std::get<CommonCause>(s).state.rho(); }

}  // namespace

TEST(EdgeDc, examples) {
  EXPECT_LT(max_abs_diff(pv(edge_dc(0.0)), Vec3(0, 1, 0)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(edge_dc(1.0)), Vec3(-1, 0, 0)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(edge_dc(0.5)), Vec3(-0.5, 0.5, 0)), 1e-12);

  const AxisAngle aa = axis_angle_from_rotation(rotation_from_unitary(std::get<DirectCause>(edge_dc(0.0)).unitary));
  EXPECT_NEAR(aa.angle, kPi / 2, 1e-12);
  EXPECT_LT(max_abs_diff(aa.axis.vec(), Vec3::UnitY()), 1e-12);

  EXPECT_THROW(edge_dc(-0.01), InvalidInput);
  EXPECT_THROW(edge_dc(1.01), InvalidInput);
}

TEST(EdgeCc, examples) {
  EXPECT_LT(max_abs_diff(pv(edge_cc(0.0)), Vec3(0, 1, 0)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(edge_cc(1.0)), Vec3(-1, 0, 0)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(edge_cc(0.5)), Vec3(-0.5, 0.5, 0)), 1e-12);

  const Mat4 expected = 0.25 * bell_vector(Bell::PsiPlus) * bell_vector(Bell::PsiPlus).adjoint() +
                        0.25 * bell_vector(Bell::PsiMinus) * bell_vector(Bell::PsiMinus).adjoint() +
                        0.5 * bell_vector(Bell::PhiMinus) * bell_vector(Bell::PhiMinus).adjoint();
  EXPECT_LT(max_abs_diff(rho_of(edge_cc(0.5)), expected), 1e-15);
  EXPECT_THROW(edge_cc(2.0), InvalidInput);
}

TEST(PlaneDc, examples) {
  EXPECT_LT(max_abs_diff(pv(plane_dc(BlochVector::z())), Vec3(0, 0, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(plane_dc(BlochVector::normalized(Vec3(1, 1, 1)))), Vec3(1, 1, 1) / 3.0), 1e-12);
  EXPECT_LT(max_abs_diff(pv(plane_dc(BlochVector::x())), Vec3(1, 0, 0)), 1e-12);
}

TEST(PlaneCc, examples) {
  EXPECT_LT(max_abs_diff(pv(plane_cc({1, 0, 0})), Vec3(1, -1, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(plane_cc({1.0 / 3, 1.0 / 3, 1.0 / 3})), Vec3(1, 1, 1) / 3.0), 1e-12);
  EXPECT_LT(max_abs_diff(pv(plane_cc({0, 0, 1})), Vec3(1, 1, -1)), 1e-12);
  EXPECT_THROW(plane_cc({0.5, 0.6, 0}), InvalidInput);
  EXPECT_THROW(plane_cc({1.5, -0.5, 0}), InvalidInput);
}

TEST(PlaneCc, weights_for_simplex_point) {
  auto rng = qcausal::testing::test_rng(40);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    double a = unit(rng), b = unit(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const std::array<double, 3> q{a, b, 1.0 - a - b};
    const Vec3 target(q[0], q[1], q[2]);
    ASSERT_LT(max_abs_diff(pv(plane_cc(plane_cc_weights_for(q))), target), 1e-12);
    ASSERT_LT(max_abs_diff(pv(plane_dc(BlochVector::normalized(target.cwiseSqrt()))), target), 1e-12);
  }
}

TEST(PhaseBell, examples) {
  EXPECT_LT(max_abs_diff(pv(phase_bell(0.0)), Vec3(1, -1, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(phase_bell(kPi)), Vec3(-1, 1, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(pv(phase_bell(kPi / 2)), Vec3(0, 0, 1)), 1e-12);
  for (double phi : {0.3, 1.1, 2.5, 4.0}) {
    EXPECT_LT(max_abs_diff(pv(phase_bell(phi)), Vec3(std::cos(phi), -std::cos(phi), 1)), 1e-12);
  }
}

TEST(Haar, unitary_and_deterministic) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Mat2 u = haar_unitary_matrix(seed);
    ASSERT_LT(unitarity_residual(u), 1e-12);
    ASSERT_EQ(u, haar_unitary_matrix(seed));
  }
  EXPECT_NE(haar_unitary_matrix(1), haar_unitary_matrix(2));
}

TEST(Haar, rotation_angle_distribution) {
  // Angle density (1 - cos t) / pi on [0, pi]; CDF (t - sin t) / pi.
  const int draws = 100000;
  const int bins = 50;
  std::vector<double> observed(bins, 0.0);
  for (int i = 0; i < draws; ++i) {
    const double t = axis_angle_from_rotation(rotation_from_unitary(haar_unitary_matrix(i))).angle;
    observed[std::min(bins - 1, static_cast<int>(t / kPi * bins))] += 1.0;
  }
  auto cdf = [](double t) { return (t - std::sin(t)) / std::numbers::pi; };
  double chi2 = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double expected = draws * (cdf(kPi * (b + 1) / bins) - cdf(kPi * b / bins));
    chi2 += (observed[b] - expected) * (observed[b] - expected) / expected;
  }
  const boost::math::chi_squared dist(bins - 1);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 0.01) << "chi2 = " << chi2;
}

TEST(RandomState, pure_draws_are_density_matrices) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Mat4& rho = rho_of(random_state(StateKind::Pure, seed));
    ASSERT_NEAR(rho.trace().real(), 1.0, 1e-12);
    ASSERT_LT(max_abs_diff(rho, rho.adjoint().eval()), 1e-12);
    ASSERT_GT(Eigen::SelfAdjointEigenSolver<Mat4>(rho).eigenvalues().minCoeff(), -1e-12);
    ASSERT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
  }
}

TEST(RandomState, mixed_purity_bounds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Mat4& rho = rho_of(random_state(StateKind::Mixed, seed));
    const double purity = (rho * rho).trace().real();
    ASSERT_GE(purity, 0.25 - 1e-12);
    ASSERT_LE(purity, 1.0 + 1e-12);
    ASSERT_GT(Eigen::SelfAdjointEigenSolver<Mat4>(rho).eigenvalues().minCoeff(), -1e-12);
  }
}

TEST(RandomState, deterministic_and_inside_cc_tetrahedron) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (const auto kind : {StateKind::Pure, StateKind::Mixed}) {
      const Scenario s = random_state(kind, seed);
      ASSERT_EQ(rho_of(s), rho_of(random_state(kind, seed)));
      ASSERT_TRUE(member(pauli_vector(s, kId, kId), cc_tetrahedron()));
    }
  }
}

TEST(ScenarioProperties, edge_families_agree) {
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const Vec3 dc = pv(edge_dc(a));
    ASSERT_LT(max_abs_diff(dc, pv(edge_cc(a))), 1e-9) << "a = " << a;
    ASSERT_LT(max_abs_diff(dc, Vec3(-a, 1 - a, 0)), 1e-9) << "a = " << a;
  }
}

TEST(ScenarioProperties, plane_families_have_zero_gap) {
  const int d = 10;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      const std::array<double, 3> q{double(i) / d, double(j) / d, double(d - i - j) / d};
      ASSERT_NEAR(plane_gap(pauli_vector(plane_cc(q), kId, kId)), 0.0, 1e-9);
    }
  }
  auto rng = qcausal::testing::test_rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = plane_dc(BlochVector(qcausal::testing::random_direction(rng)));
    ASSERT_NEAR(plane_gap(pauli_vector(s, kId, kId)), 0.0, 1e-9);
  }
}

TEST(ScenarioProperties, phase_bell_mimics_quarter_turn) {
  EXPECT_LT(max_abs_diff(pv(phase_bell(kPi / 2)), pv(plane_dc(BlochVector::z()))), 1e-12);
}
