#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "qcausal/correlation.hpp"

namespace qcausal {

/// Non-degenerate tetrahedron in correlation space.
class Polytope {
 public:
  explicit Polytope(const std::array<Vec3, 4>& vertices);

  const std::array<Vec3, 4>& vertices() const { return vertices_; }
  double volume() const;

  /// Affine weights of `p`; see barycentric().
  std::array<double, 4> weights(const Vec3& p) const;

 private:
  std::array<Vec3, 4> vertices_;
  Mat3 inverse_edges_;
};

/// Correlations reachable by unitary channels; vertices are the Pauli unitaries
/// I, sigma_x, sigma_y, sigma_z in that order.
const Polytope& dc_tetrahedron();

/// Correlations reachable by two-qubit states; vertices are the Bell states
/// Phi+, Phi-, Psi+, Psi- in that order.
const Polytope& cc_tetrahedron();

/// Affine weights of `p` with respect to the vertices; they sum to one.
std::array<double, 4> barycentric(const CorrelationVector& p, const Polytope& t);

bool member(const CorrelationVector& p, const Polytope& t, double tol = kTolerances.membership);

/// Most negative barycentric weight, clipped at zero. Zero means inside.
double membership_violation(const CorrelationVector& p, const Polytope& t);

enum class RegionLabel { DCOnly, CCOnly, Overlap, Outside };

std::string_view to_string(RegionLabel label);

RegionLabel classify_region(const CorrelationVector& p, double tol = kTolerances.membership);

/// 1 - (C11 + C22 + C33); zero on the plane that carries the Phi+, Phi-, Psi+ face.
double plane_gap(const CorrelationVector& p);

double distance(const CorrelationVector& p, const CorrelationVector& q);

/// Tolerance for membership tests on shot-sampled correlations.
double sampled_membership_tolerance(std::int64_t shots);

}  // namespace qcausal
