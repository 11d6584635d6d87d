#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "qcausal/tolerances.hpp"

namespace qcausal {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Thrown for inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pauli matrix by index: 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z.
Mat2 pauli(int k);

Mat4 kron(const Mat2& a, const Mat2& b);

bool is_unitary(const Mat2& u, double tol = kTolerances.input);
bool is_hermitian(const Mat2& m, double tol = kTolerances.input);
bool is_hermitian(const Mat4& m, double tol = kTolerances.input);

/// Largest absolute deviation of U^dagger U from the identity.
double unitarity_residual(const Mat2& u);

/// Unit direction on the Bloch sphere.
class BlochVector {
 public:
  /// Accepts only vectors already of unit norm (within `tol`).
  explicit BlochVector(const Vec3& n, double tol = kTolerances.validation);

  /// Normalizes `v`; throws for the zero vector.
  static BlochVector normalized(const Vec3& v);

  static BlochVector x() { return BlochVector(Vec3::UnitX()); }
  static BlochVector y() { return BlochVector(Vec3::UnitY()); }
  static BlochVector z() { return BlochVector(Vec3::UnitZ()); }

  const Vec3& vec() const { return n_; }
  double operator[](int i) const { return n_[i]; }

 private:
  Vec3 n_;
};

/// Element of SO(3), the adjoint image of a qubit unitary.
class RotationMatrix {
 public:
  explicit RotationMatrix(const Mat3& r, double tol = kTolerances.validation);

  static RotationMatrix identity() { return RotationMatrix(Mat3::Identity()); }

  const Mat3& mat() const { return r_; }
  double operator()(int i, int j) const { return r_(i, j); }
  RotationMatrix operator*(const RotationMatrix& other) const;

 private:
  Mat3 r_;
};

/// Rotation by `angle` in [0, pi] about `axis`.
struct AxisAngle {
  BlochVector axis = BlochVector::z();
  double angle = 0.0;

  AxisAngle() = default;
  AxisAngle(BlochVector axis, double angle);
};

/// exp(-i angle (n . sigma) / 2).
Mat2 unitary_from_axis_angle(const AxisAngle& aa);

/// R_kl = 1/2 Tr[sigma_k U sigma_l U^dagger]. Throws InvalidInput when U is
/// not unitary to within the input tolerance.
RotationMatrix rotation_from_unitary(const Mat2& u);

/// Canonical axis-angle form. The identity maps to (z, 0); for half turns
/// the lexicographically largest of the two antipodal axes is returned.
AxisAngle axis_angle_from_rotation(const RotationMatrix& r);

/// Rodrigues formula, evaluated directly in SO(3).
Mat3 rodrigues(const AxisAngle& aa);

/// |Tr(A^dagger B)| / 2: equals 1 iff A and B agree up to a global phase.
double phase_insensitive_overlap(const Mat2& a, const Mat2& b);

}  // namespace qcausal
