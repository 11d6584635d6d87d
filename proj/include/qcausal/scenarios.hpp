#pragma once

#include <array>
#include <cstdint>

#include "qcausal/comb.hpp"

namespace qcausal {

/// Bell states (|00> + |11>)/sqrt2, (|00> - |11>)/sqrt2, (|01> + |10>)/sqrt2, (|01> - |10>)/sqrt2.
enum class Bell { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

Vec4 bell_vector(Bell b);

/// Mixture of the four Bell states with weights ordered (Phi+, Phi-, Psi+, Psi-).
TwoQubitState bell_diagonal(const std::array<double, 4>& weights);

TwoQubitState pure_state(const Vec4& psi);

/// Channel with Pauli correlations (-a, 1 - a, 0): rotation by arccos(-a)
/// about (0, sqrt(1/(1+a)), sqrt(a/(1+a))). Requires a in [0, 1].
Scenario edge_dc(double a);

/// State with the same correlations as edge_dc(a): Bell weights (0, 1/2, (1-a)/2, a/2).
Scenario edge_cc(double a);

/// Quarter turn about `axis`; correlations (n1^2, n2^2, n3^2), on the plane sum = 1.
Scenario plane_dc(const BlochVector& axis);

/// p1 Phi+ + p2 Phi- + p3 Psi+; correlations (p1-p2+p3, -p1+p2+p3, p1+p2-p3).
Scenario plane_cc(const std::array<double, 3>& weights);

/// Bell weights that put plane_cc on the correlation vector q, for q on the
/// simplex q_k >= 0, sum q = 1 (the region plane_dc also reaches).
std::array<double, 3> plane_cc_weights_for(const std::array<double, 3>& q);

/// Pure state (|00> + e^{i phi}|11>)/sqrt2; correlations (cos phi, -cos phi, 1).
Scenario phase_bell(double phi);

/// Haar-random SU(2) channel, deterministic per seed.
Mat2 haar_unitary_matrix(std::uint64_t seed);
Scenario haar_unitary(std::uint64_t seed);

enum class StateKind { Pure, Mixed };

/// Pure: Haar-random vector in C^4. Mixed: Hilbert-Schmidt ensemble G G^dagger / Tr.
Scenario random_state(StateKind kind, std::uint64_t seed);

}  // namespace qcausal
