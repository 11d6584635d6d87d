#include "qcausal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qcausal {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Mat2 pauli(int k) {
  Mat2 m;
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::out_of_range("pauli index must be in 0..3, got " + std::to_string(k));
  }
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

double unitarity_residual(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
}

bool is_unitary(const Mat2& u, double tol) {
  return u.allFinite() && unitarity_residual(u) <= tol;
}

bool is_hermitian(const Mat2& m, double tol) {
  return m.allFinite() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Mat4& m, double tol) {
  return m.allFinite() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

BlochVector::BlochVector(const Vec3& n, double tol) : n_(n) {
  if (!n.allFinite() || std::abs(n.norm() - 1.0) > tol) {
    throw InvalidInput("Bloch vector must have unit norm");
  }
}

BlochVector BlochVector::normalized(const Vec3& v) {
  const double norm = v.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw InvalidInput("cannot normalize a zero or non-finite vector");
  }
  return BlochVector(v / norm);
}

RotationMatrix::RotationMatrix(const Mat3& r, double tol) : r_(r) {
  if (!r.allFinite()) throw InvalidInput("rotation matrix has non-finite entries");
  const double orth = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (orth > tol || std::abs(r.determinant() - 1.0) > tol) {
    throw InvalidInput("matrix is not in SO(3)");
  }
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& other) const {
  return RotationMatrix(r_ * other.r_);
}

AxisAngle::AxisAngle(BlochVector axis_in, double angle_in) : axis(axis_in), angle(angle_in) {
  if (!(angle >= 0.0 && angle <= std::numbers::pi + 1e-12)) {
    throw InvalidInput("rotation angle must lie in [0, pi]");
  }
  angle = std::min(angle, std::numbers::pi);
}

Mat2 unitary_from_axis_angle(const AxisAngle& aa) {
  const Vec3& n = aa.axis.vec();
  const Mat2 n_sigma = n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
  const double half = aa.angle / 2.0;
  return std::cos(half) * Mat2::Identity() - kI * std::sin(half) * n_sigma;
}

RotationMatrix rotation_from_unitary(const Mat2& u) {
  if (!is_unitary(u, kTolerances.input)) {
    throw InvalidInput("rotation_from_unitary: input is not unitary");
  }
  Mat3 r;
  for (int k = 0; k < 3; ++k) {
    const Mat2 sk = pauli(k + 1);
    for (int l = 0; l < 3; ++l) {
      r(k, l) = 0.5 * (sk * u * pauli(l + 1) * u.adjoint()).trace().real();
    }
  }
  // Inputs within the input tolerance of unitary give rotations that are only
  // approximately orthogonal, so validate at the same looser bound.
  return RotationMatrix(r, 10 * kTolerances.input);
}

AxisAngle axis_angle_from_rotation(const RotationMatrix& rot) {
  const Mat3& r = rot.mat();
  const Vec3 w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  const double sin_theta = 0.5 * w.norm();
  const double cos_theta = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  const double angle = std::atan2(sin_theta, cos_theta);

  if (angle < 1e-12) return AxisAngle{};

  // Away from a half turn the antisymmetric part fixes the axis with its sign.
  if (cos_theta > -0.5) {
    return AxisAngle(BlochVector::normalized(w), angle);
  }

  // Near a half turn use the symmetric part: (R + R^T)/2 = cos I + (1 - cos) n n^T.
  const Mat3 sym = 0.5 * (r + r.transpose()) - cos_theta * Mat3::Identity();
  int pivot = 0;
  sym.diagonal().maxCoeff(&pivot);
  Vec3 n = sym.col(pivot) / std::sqrt(std::max(sym(pivot, pivot), 0.0) * (1.0 - cos_theta));
  n.normalize();

  if (w.dot(n) < 0.0) n = -n;
  if (sin_theta < 1e-12) {
    // Exact half turn: both signs describe the same rotation.
    for (int i = 0; i < 3; ++i) {
      if (std::abs(n[i]) > 1e-12) {
        if (n[i] < 0.0) n = -n;
        break;
      }
    }
  }
  return AxisAngle(BlochVector::normalized(n), angle);
}

Mat3 rodrigues(const AxisAngle& aa) {
  const Vec3& n = aa.axis.vec();
  Mat3 k;
  k << 0, -n[2], n[1], n[2], 0, -n[0], -n[1], n[0], 0;
  return Mat3::Identity() + std::sin(aa.angle) * k + (1.0 - std::cos(aa.angle)) * k * k;
}

double phase_insensitive_overlap(const Mat2& a, const Mat2& b) {
  return std::abs((a.adjoint() * b).trace()) / 2.0;
}

}  // namespace qcausal
