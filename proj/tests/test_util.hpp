#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "qcausal/linalg.hpp"
#include "qcausal/rng.hpp"

namespace qcausal::testing {

inline Rng test_rng(std::uint64_t salt = 0) { return Rng(0xC0FFEEULL + salt); }

inline Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> normal;
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

inline AxisAngle random_axis_angle(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  return AxisAngle(BlochVector(random_direction(rng)), angle(rng));
}

/// Random U(2) element with a random global phase.
inline Mat2 random_unitary(Rng& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, phase(rng)) * unitary_from_axis_angle(random_axis_angle(rng));
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qcausal::testing
