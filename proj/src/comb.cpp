#include "qcausal/comb.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <boost/random/binomial_distribution.hpp>

#include "qcausal/rng.hpp"

namespace qcausal {

std::ostream& operator<<(std::ostream& os, const CorrelationVector& p) {
  return os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ")";
}

namespace {

template <typename M>
bool density_matrix_check(const M& rho, double tol) {
  if (!is_hermitian(rho, tol)) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<M> eig(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol;
}

/// Projector onto the outcome `x` of W sigma_k W^dagger.
Mat2 projector(const ObservableSpec& obs, int x) {
  const Mat2 local = 0.5 * (Mat2::Identity() + static_cast<double>(x) * pauli(obs.pauli_index));
  return obs.modifier * local * obs.modifier.adjoint();
}

}  // namespace

bool is_density_matrix(const Mat2& rho, double tol) { return density_matrix_check(rho, tol); }
bool is_density_matrix(const Mat4& rho, double tol) { return density_matrix_check(rho, tol); }

TwoQubitState::TwoQubitState(const Mat4& rho, double tol) : rho_(rho) {
  if (!is_density_matrix(rho, tol)) {
    throw InvalidInput("two-qubit state is not a valid density matrix");
  }
}

Mat3 TwoQubitState::correlation_matrix() const {
  Mat3 t;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      t(k, l) = (rho_ * kron(pauli(k + 1), pauli(l + 1))).trace().real();
    }
  }
  return t;
}

DirectCause::DirectCause(const Mat2& u) : DirectCause(u, 0.5 * Mat2::Identity()) {}

DirectCause::DirectCause(const Mat2& u, const Mat2& marginal) : unitary(u), input_marginal(marginal) {
  if (!is_unitary(u)) throw InvalidInput("direct-cause channel must be unitary");
  if (!is_density_matrix(marginal)) throw InvalidInput("input marginal is not a density matrix");
}

bool is_direct_cause(const Scenario& s) { return std::holds_alternative<DirectCause>(s); }

ObservableSpec::ObservableSpec(const Mat2& w, int k) : modifier(w), pauli_index(k) {
  if (k < 1 || k > 3) throw InvalidInput("observable Pauli index must be 1..3");
  if (!is_unitary(w)) throw InvalidInput("observable modifier must be unitary");
}

JointDistribution exact_joint(const Scenario& s, const ObservableSpec& obs_x, const ObservableSpec& obs_y) {
  JointDistribution d;
  for (int x : {+1, -1}) {
    const Mat2 px = projector(obs_x, x);
    for (int y : {+1, -1}) {
      const Mat2 py = projector(obs_y, y);
      double p = 0.0;
      if (const auto* dc = std::get_if<DirectCause>(&s)) {
        // Lüders repreparation: after outcome x the system is px / Tr(px) = px.
        const double p_x = (px * dc->input_marginal).trace().real();
        const double p_y_given_x = (py * dc->unitary * px * dc->unitary.adjoint()).trace().real();
        p = p_x * p_y_given_x;
      } else {
        const auto& cc = std::get<CommonCause>(s);
        p = (cc.state.rho() * kron(px, py)).trace().real();
      }
      d.p[2 * outcome_index(x) + outcome_index(y)] = p;
    }
  }
  return d;
}

ShotCounts sample_counts(const JointDistribution& d, std::int64_t shots, std::uint64_t seed) {
  if (shots <= 0) throw InvalidInput("sample_counts: shot count must be positive");
  Rng rng(seed);
  ShotCounts out;
  std::array<double, 4> w{};
  double remaining_mass = 0.0;
  for (int i = 0; i < 4; ++i) {
    w[i] = std::max(d.p[i], 0.0);
    remaining_mass += w[i];
  }
  if (remaining_mass <= 0.0) throw InvalidInput("sample_counts: distribution has no mass");

  // Sequential conditional binomials.
  std::int64_t remaining = shots;
  for (int i = 0; i < 3 && remaining > 0; ++i) {
    const double q = remaining_mass > 0.0 ? std::clamp(w[i] / remaining_mass, 0.0, 1.0) : 0.0;
    std::int64_t draw = 0;
    if (q >= 1.0) {
      draw = remaining;
    } else if (q > 0.0) {
      boost::random::binomial_distribution<std::int64_t, double> binom(remaining, q);
      draw = binom(rng);
    }
    out.counts[i] = draw;
    remaining -= draw;
    remaining_mass -= w[i];
  }
  out.counts[3] = remaining;
  return out;
}

double correlation(const JointDistribution& d) { return d.p[0] + d.p[3] - d.p[1] - d.p[2]; }

double correlation(const ShotCounts& c) {
  const std::int64_t n = c.shots();
  if (n <= 0) throw InvalidInput("correlation: empty counts");
  return static_cast<double>(c.counts[0] + c.counts[3] - c.counts[1] - c.counts[2]) / static_cast<double>(n);
}

bool is_sampled(const MeasurementMode& mode) { return std::holds_alternative<SampledMode>(mode); }

std::int64_t shots_of(const MeasurementMode& mode) {
  if (const auto* s = std::get_if<SampledMode>(&mode)) return s->shots;
  return 0;
}

namespace {

Observation observe_with_seeds(const Scenario& s, const Mat2& wx, const Mat2& wy, const MeasurementMode& mode,
                               std::uint64_t stream) {
  Observation obs;
  const auto* sampled = std::get_if<SampledMode>(&mode);
  if (sampled) obs.counts.emplace();
  for (int k = 1; k <= 3; ++k) {
    const JointDistribution d = exact_joint(s, ObservableSpec(wx, k), ObservableSpec(wy, k));
    if (sampled) {
      const auto seed = derive_seed(sampled->seed, {stream, static_cast<std::uint64_t>(k)});
      const ShotCounts counts = sample_counts(d, sampled->shots, seed);
      (*obs.counts)[k - 1] = counts;
      obs.correlations[k - 1] = std::clamp(correlation(counts), -1.0, 1.0);
    } else {
      obs.correlations[k - 1] = correlation(d);
    }
  }
  return obs;
}

}  // namespace

Observation observe(const Scenario& s, const Mat2& wx, const Mat2& wy, const MeasurementMode& mode) {
  return observe_with_seeds(s, wx, wy, mode, 0);
}

CorrelationVector pauli_vector(const Scenario& s, const Mat2& wx, const Mat2& wy, const MeasurementMode& mode) {
  return observe(s, wx, wy, mode).correlations;
}

MeasurementOracle::MeasurementOracle(Scenario s, MeasurementMode mode) : scenario_(std::move(s)), mode_(mode) {
  if (const auto* sm = std::get_if<SampledMode>(&mode_); sm && sm->shots <= 0) {
    throw InvalidInput("sampled mode needs a positive shot count");
  }
}

Observation MeasurementOracle::query(const Mat2& wx, const Mat2& wy) {
  const std::size_t index = count_.fetch_add(1, std::memory_order_relaxed);
  return observe_with_seeds(scenario_, wx, wy, mode_, index + 1);
}

MeasurementOracle make_oracle(Scenario s, MeasurementMode mode) { return MeasurementOracle(std::move(s), mode); }

}  // namespace qcausal
