#include "qcausal/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace qcausal {

Polytope::Polytope(const std::array<Vec3, 4>& vertices) : vertices_(vertices) {
  Mat3 edges;
  for (int i = 0; i < 3; ++i) edges.col(i) = vertices_[i] - vertices_[3];
  if (!edges.allFinite() || std::abs(edges.determinant()) < 1e-12) {
    throw InvalidInput("degenerate tetrahedron");
  }
  inverse_edges_ = edges.inverse();
}

double Polytope::volume() const {
  Mat3 edges;
  for (int i = 0; i < 3; ++i) edges.col(i) = vertices_[i] - vertices_[3];
  return std::abs(edges.determinant()) / 6.0;
}

std::array<double, 4> Polytope::weights(const Vec3& p) const {
  const Vec3 w = inverse_edges_ * (p - vertices_[3]);
  return {w[0], w[1], w[2], 1.0 - w[0] - w[1] - w[2]};
}

const Polytope& dc_tetrahedron() {
  static const Polytope t({Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)});
  return t;
}

const Polytope& cc_tetrahedron() {
  static const Polytope t({Vec3(1, -1, 1), Vec3(-1, 1, 1), Vec3(1, 1, -1), Vec3(-1, -1, -1)});
  return t;
}

std::array<double, 4> barycentric(const CorrelationVector& p, const Polytope& t) {
  return t.weights(p.c);
}

double membership_violation(const CorrelationVector& p, const Polytope& t) {
  const auto w = barycentric(p, t);
  return std::max(0.0, -*std::min_element(w.begin(), w.end()));
}

bool member(const CorrelationVector& p, const Polytope& t, double tol) {
  const auto w = barycentric(p, t);
  return std::all_of(w.begin(), w.end(), [tol](double x) { return x >= -tol; });
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::DCOnly: return "dc_only";
    case RegionLabel::CCOnly: return "cc_only";
    case RegionLabel::Overlap: return "overlap";
    case RegionLabel::Outside: return "outside";
  }
  return "unknown";
}

RegionLabel classify_region(const CorrelationVector& p, double tol) {
  const bool in_dc = member(p, dc_tetrahedron(), tol);
  const bool in_cc = member(p, cc_tetrahedron(), tol);
  if (in_dc && in_cc) return RegionLabel::Overlap;
  if (in_dc) return RegionLabel::DCOnly;
  if (in_cc) return RegionLabel::CCOnly;
  return RegionLabel::Outside;
}

double plane_gap(const CorrelationVector& p) { return 1.0 - p.sum(); }

double distance(const CorrelationVector& p, const CorrelationVector& q) { return (p.c - q.c).norm(); }

double sampled_membership_tolerance(std::int64_t shots) {
  if (shots <= 0) return kTolerances.membership;
  return 3.0 / std::sqrt(static_cast<double>(shots));
}

}  // namespace qcausal
