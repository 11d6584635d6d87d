#pragma once

// Two-point measurement model: a hidden direct-cause channel or common-cause
// state, measured at X and then at Y with Pauli observables rotated by
// caller-chosen modifiers. The measurement at X is followed by Lüders
// repreparation, so it never signals to Y.

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "qcausal/correlation.hpp"
#include "qcausal/linalg.hpp"

namespace qcausal {

/// Validated two-qubit density matrix.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat4& rho, double tol = kTolerances.input);

  const Mat4& rho() const { return rho_; }

  /// T_kl = Tr[rho sigma_k (x) sigma_l].
  Mat3 correlation_matrix() const;

 private:
  Mat4 rho_;
};

bool is_density_matrix(const Mat2& rho, double tol = kTolerances.input);
bool is_density_matrix(const Mat4& rho, double tol = kTolerances.input);

/// The system measured at X is sent through the unitary channel to Y.
struct DirectCause {
  Mat2 unitary;
  /// State arriving at X. The identification guarantees assume I/2.
  Mat2 input_marginal;

  explicit DirectCause(const Mat2& u);
  DirectCause(const Mat2& u, const Mat2& marginal);
};

/// X and Y measure the two halves of one bipartite state.
struct CommonCause {
  TwoQubitState state;
};

using Scenario = std::variant<DirectCause, CommonCause>;

bool is_direct_cause(const Scenario& s);

/// Observable W sigma_k W^dagger.
struct ObservableSpec {
  Mat2 modifier;
  int pauli_index;

  ObservableSpec(const Mat2& w, int k);
};

/// Outcome index: +1 maps to 0, -1 maps to 1.
constexpr int outcome_index(int outcome) { return outcome > 0 ? 0 : 1; }

/// Joint outcome probabilities, ordered (++, +-, -+, --).
struct JointDistribution {
  std::array<double, 4> p{};

  double at(int x, int y) const { return p[2 * outcome_index(x) + outcome_index(y)]; }
  double marginal_x(int x) const { return at(x, +1) + at(x, -1); }
  double marginal_y(int y) const { return at(+1, y) + at(-1, y); }
};

/// Coincidence counts, ordered like JointDistribution.
struct ShotCounts {
  std::array<std::int64_t, 4> counts{};

  std::int64_t shots() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  bool operator==(const ShotCounts&) const = default;
};

JointDistribution exact_joint(const Scenario& s, const ObservableSpec& obs_x, const ObservableSpec& obs_y);

/// One multinomial draw of `shots` outcomes; deterministic given `seed`.
ShotCounts sample_counts(const JointDistribution& d, std::int64_t shots, std::uint64_t seed);

/// p(x = y) - p(x != y).
double correlation(const JointDistribution& d);
double correlation(const ShotCounts& counts);

struct ExactMode {};
struct SampledMode {
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};
using MeasurementMode = std::variant<ExactMode, SampledMode>;

bool is_sampled(const MeasurementMode& mode);
std::int64_t shots_of(const MeasurementMode& mode);

/// Result of measuring all three same-setting pairs once.
struct Observation {
  CorrelationVector correlations;
  /// Raw counts per setting k = 1..3; present only in sampled mode.
  std::optional<std::array<ShotCounts, 3>> counts;
};

/// Entry k is the correlation for observables (Wx sigma_k Wx^dagger, Wy sigma_k Wy^dagger).
Observation observe(const Scenario& s, const Mat2& wx, const Mat2& wy, const MeasurementMode& mode);

CorrelationVector pauli_vector(const Scenario& s, const Mat2& wx, const Mat2& wy,
                               const MeasurementMode& mode = ExactMode{});

/// Query-only access to a hidden scenario.
///
/// The scenario cannot be read back through this interface. Each query gets
/// its own sampling stream derived from the base seed and the query index, so
/// a sequence of queries is reproducible for a given seed.
class MeasurementOracle {
 public:
  MeasurementOracle(Scenario s, MeasurementMode mode);

  MeasurementOracle(const MeasurementOracle&) = delete;
  MeasurementOracle& operator=(const MeasurementOracle&) = delete;

  Observation query(const Mat2& wx, const Mat2& wy);

  std::size_t query_count() const { return count_.load(std::memory_order_relaxed); }
  bool sampled() const { return is_sampled(mode_); }
  std::int64_t shots() const { return shots_of(mode_); }

 private:
  Scenario scenario_;
  MeasurementMode mode_;
  std::atomic<std::size_t> count_{0};
};

MeasurementOracle make_oracle(Scenario s, MeasurementMode mode = ExactMode{});

}  // namespace qcausal
