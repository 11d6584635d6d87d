#pragma once

namespace qcausal {

/// Numerical tolerances shared by every module.
///
/// `validation` is used when checking results the library itself produced
/// (unit norms, orthogonality, density-matrix invariants). `input` is the
/// looser bound applied to matrices handed in by callers, which may come
/// from files or noisy reconstructions.
struct Tolerances {
  double validation = 1e-9;
  double input = 1e-6;
  /// Barycentric slack for tetrahedron membership in exact mode.
  double membership = 1e-7;
};

inline constexpr Tolerances kTolerances{};

}  // namespace qcausal
