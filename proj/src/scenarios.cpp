#include "qcausal/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/random/normal_distribution.hpp>

#include "qcausal/rng.hpp"

namespace qcausal {

namespace {

void require_unit_interval(double a, const char* what) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidInput(std::string(what) + ": parameter must lie in [0, 1]");
}

void require_simplex(const double* w, int n) {
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(w[i] >= -kTolerances.input)) throw InvalidInput("simplex weights must be non-negative");
    total += w[i];
  }
  if (std::abs(total - 1.0) > kTolerances.input) throw InvalidInput("simplex weights must sum to 1");
}

}  // namespace

Vec4 bell_vector(Bell b) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (b) {
    case Bell::PhiPlus: return Vec4(r, 0, 0, r);
    case Bell::PhiMinus: return Vec4(r, 0, 0, -r);
    case Bell::PsiPlus: return Vec4(0, r, r, 0);
    case Bell::PsiMinus: return Vec4(0, r, -r, 0);
  }
  throw InvalidInput("unknown Bell state");
}

TwoQubitState bell_diagonal(const std::array<double, 4>& weights) {
  require_simplex(weights.data(), 4);
  Mat4 rho = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    const Vec4 v = bell_vector(static_cast<Bell>(i));
    rho += weights[i] * v * v.adjoint();
  }
  return TwoQubitState(rho);
}

TwoQubitState pure_state(const Vec4& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw InvalidInput("pure_state: zero vector");
  const Vec4 v = psi / norm;
  return TwoQubitState(v * v.adjoint());
}

Scenario edge_dc(double a) {
  require_unit_interval(a, "edge_dc");
  const Vec3 axis(0.0, std::sqrt(1.0 / (1.0 + a)), std::sqrt(a / (1.0 + a)));
  return DirectCause(unitary_from_axis_angle(AxisAngle(BlochVector::normalized(axis), std::acos(-a))));
}

Scenario edge_cc(double a) {
  require_unit_interval(a, "edge_cc");
  return CommonCause{bell_diagonal({0.0, 0.5, (1.0 - a) / 2.0, a / 2.0})};
}

Scenario plane_dc(const BlochVector& axis) {
  return DirectCause(unitary_from_axis_angle(AxisAngle(axis, std::numbers::pi / 2.0)));
}

Scenario plane_cc(const std::array<double, 3>& weights) {
  require_simplex(weights.data(), 3);
  return CommonCause{bell_diagonal({weights[0], weights[1], weights[2], 0.0})};
}

std::array<double, 3> plane_cc_weights_for(const std::array<double, 3>& q) {
  require_simplex(q.data(), 3);
  return {(q[0] + q[2]) / 2.0, (q[1] + q[2]) / 2.0, (q[0] + q[1]) / 2.0};
}

Scenario phase_bell(double phi) {
  const double r = 1.0 / std::numbers::sqrt2;
  return CommonCause{pure_state(Vec4(r, 0, 0, r * std::polar(1.0, phi)))};
}

Mat2 haar_unitary_matrix(std::uint64_t seed) {
  // A uniformly random unit quaternion is Haar on SU(2).
  Rng rng(derive_seed(seed, {0x5u}));
  boost::random::normal_distribution<double> normal;
  Eigen::Vector4d q;
  do {
    for (int i = 0; i < 4; ++i) q[i] = normal(rng);
  } while (q.norm() < 1e-12);
  q.normalize();
  const Complex i{0.0, 1.0};
  return q[0] * Mat2::Identity() - i * (q[1] * pauli(1) + q[2] * pauli(2) + q[3] * pauli(3));
}

Scenario haar_unitary(std::uint64_t seed) { return DirectCause(haar_unitary_matrix(seed)); }

Scenario random_state(StateKind kind, std::uint64_t seed) {
  Rng rng(derive_seed(seed, {0x7u, static_cast<std::uint64_t>(kind)}));
  boost::random::normal_distribution<double> normal;
  auto gaussian = [&] { return Complex(normal(rng), normal(rng)); };

  if (kind == StateKind::Pure) {
    Vec4 psi;
    do {
      for (int i = 0; i < 4; ++i) psi[i] = gaussian();
    } while (psi.norm() < 1e-12);
    return CommonCause{pure_state(psi)};
  }

  Mat4 g;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) g(r, c) = gaussian();
  }
  Mat4 rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return CommonCause{TwoQubitState(rho)};
}

}  // namespace qcausal
