#include "qcausal/geometry.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "gtest/gtest.h"
#include "qcausal/scenarios.hpp"
#include "test_util.hpp"

using namespace qcausal;

namespace {

// Oracle: solve [v1 v2 v3 v4; 1 1 1 1] w = [p; 1] directly.
std::array<double, 4> solve_weights(const Polytope& t, const Vec3& p) {
  Eigen::Matrix4d a;
  for (int j = 0; j < 4; ++j) {
    a.block<3, 1>(0, j) = t.vertices()[j];
    a(3, j) = 1.0;
  }
  Eigen::Vector4d b;
  b << p, 1.0;
  const Eigen::Vector4d w = a.fullPivLu().solve(b);
  return {w[0], w[1], w[2], w[3]};
}

}  // namespace

TEST(Tetrahedra, vertices_and_volume) {
  EXPECT_EQ(dc_tetrahedron().vertices()[0], Vec3(1, 1, 1));
  EXPECT_EQ(dc_tetrahedron().vertices()[3], Vec3(-1, -1, 1));
  EXPECT_EQ(cc_tetrahedron().vertices()[0], Vec3(1, -1, 1));
  EXPECT_EQ(cc_tetrahedron().vertices()[3], Vec3(-1, -1, -1));
  // Regular tetrahedron with edge 2 sqrt2.
  EXPECT_NEAR(dc_tetrahedron().volume(), 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(cc_tetrahedron().volume(), 8.0 / 3.0, 1e-12);
  EXPECT_THROW(Polytope({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(0, 1, 0)}), InvalidInput);
}

TEST(Barycentric, examples) {
  const auto w = barycentric(CorrelationVector(0, 0, 1), dc_tetrahedron());
  EXPECT_NEAR(w[0], 0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.0, 1e-15);
  EXPECT_NEAR(w[2], 0.0, 1e-15);
  EXPECT_NEAR(w[3], 0.5, 1e-15);

  const auto centre = barycentric(CorrelationVector(0, 0, 0), cc_tetrahedron());
  for (double x : centre) EXPECT_NEAR(x, 0.25, 1e-15);
}

TEST(Barycentric, agrees_with_linear_solve) {
  auto rng = qcausal::testing::test_rng(20);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 p(coord(rng), coord(rng), coord(rng));
    for (const Polytope* t : {&dc_tetrahedron(), &cc_tetrahedron()}) {
      const auto got = barycentric(CorrelationVector(p), *t);
      const auto want = solve_weights(*t, p);
      double sum = 0.0;
      for (int i = 0; i < 4; ++i) {
        ASSERT_NEAR(got[i], want[i], 1e-12);
        sum += got[i];
      }
      ASSERT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Membership, examples) {
  EXPECT_TRUE(member(CorrelationVector(1, 1, 1), dc_tetrahedron()));
  EXPECT_FALSE(member(CorrelationVector(1, 1, 1), cc_tetrahedron()));
  EXPECT_TRUE(member(CorrelationVector(1, -1, 1), cc_tetrahedron()));
  EXPECT_FALSE(member(CorrelationVector(1, 1, 1.01), dc_tetrahedron()));
  EXPECT_TRUE(member(CorrelationVector(1, 1, 1.01), dc_tetrahedron(), 0.01));
  EXPECT_DOUBLE_EQ(membership_violation(CorrelationVector(0, 0, 0), dc_tetrahedron()), 0.0);
  EXPECT_GT(membership_violation(CorrelationVector(2, 0, 0), dc_tetrahedron()), 0.0);
}

TEST(Region, examples) {
  EXPECT_EQ(classify_region(CorrelationVector(1, 1, 1)), RegionLabel::DCOnly);
  EXPECT_EQ(classify_region(CorrelationVector(-1, -1, -1)), RegionLabel::CCOnly);
  EXPECT_EQ(classify_region(CorrelationVector(0, 0, 0)), RegionLabel::Overlap);
  EXPECT_EQ(classify_region(CorrelationVector(0.5, 0.5, 0)), RegionLabel::Overlap);
  EXPECT_EQ(classify_region(CorrelationVector(2, 0, 0)), RegionLabel::Outside);
  EXPECT_EQ(to_string(RegionLabel::DCOnly), "dc_only");
  EXPECT_EQ(to_string(RegionLabel::Outside), "outside");
}

TEST(PlaneGapAndDistance, examples) {
  EXPECT_DOUBLE_EQ(plane_gap(CorrelationVector(1, 1, 1)), -2.0);
  EXPECT_DOUBLE_EQ(plane_gap(CorrelationVector(1, -1, 1)), 0.0);
  EXPECT_DOUBLE_EQ(plane_gap(CorrelationVector(-0.5, 0.5, 0)), 1.0);
  EXPECT_DOUBLE_EQ(distance(CorrelationVector(1, -1, 1), CorrelationVector(-1, -1, 1)), 2.0);
  EXPECT_DOUBLE_EQ(sampled_membership_tolerance(10000), 0.03);
  EXPECT_DOUBLE_EQ(sampled_membership_tolerance(0), kTolerances.membership);
}

TEST(GeometryProperties, random_unitaries_inside_dc_tetrahedron) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto p = pauli_vector(haar_unitary(seed), Mat2::Identity(), Mat2::Identity());
    ASSERT_TRUE(member(p, dc_tetrahedron())) << p;
  }
}

TEST(GeometryProperties, random_states_inside_cc_tetrahedron) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto kind = seed % 2 ? StateKind::Pure : StateKind::Mixed;
    const auto p = pauli_vector(random_state(kind, seed), Mat2::Identity(), Mat2::Identity());
    ASSERT_TRUE(member(p, cc_tetrahedron())) << p;
  }
}

TEST(GeometryProperties, overlap_is_octahedron) {
  // Grid of spacing 0.05 over [-1, 1]^3, points on the octahedron boundary
  // included; the boundary sits exactly on grid nodes.
  const int n = 41;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Vec3 p(-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1), -1.0 + 2.0 * k / (n - 1));
        const CorrelationVector c(p);
        const bool both = member(c, dc_tetrahedron()) && member(c, cc_tetrahedron());
        const bool octa = p.cwiseAbs().sum() <= 1.0 + 1e-9;
        ASSERT_EQ(both, octa) << p.transpose();
      }
    }
  }
}

TEST(GeometryProperties, plane_sum_one_is_shared_face) {
  auto rng = qcausal::testing::test_rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double a = unit(rng), b = unit(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const std::array<double, 3> w{a, b, 1.0 - a - b};
    const auto p = pauli_vector(plane_cc(w), Mat2::Identity(), Mat2::Identity());
    ASSERT_NEAR(plane_gap(p), 0.0, 1e-12);
    ASSERT_TRUE(member(p, cc_tetrahedron()));
    // The Psi- vertex carries no weight on this face.
    ASSERT_NEAR(barycentric(p, cc_tetrahedron())[3], 0.0, 1e-12);
  }
}
