#pragma once

#include <array>
#include <iosfwd>

#include "qcausal/linalg.hpp"

namespace qcausal {

/// Same-setting correlations (C11, C22, C33).
struct CorrelationVector {
  Vec3 c = Vec3::Zero();

  CorrelationVector() = default;
  explicit CorrelationVector(const Vec3& v) : c(v) {}
  CorrelationVector(double c11, double c22, double c33) : c(c11, c22, c33) {}

  double operator[](int k) const { return c[k]; }
  double& operator[](int k) { return c[k]; }
  double sum() const { return c.sum(); }
};

std::ostream& operator<<(std::ostream& os, const CorrelationVector& p);

}  // namespace qcausal
