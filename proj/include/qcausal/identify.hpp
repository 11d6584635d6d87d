#pragma once

// Observational identification of direct cause versus common cause.
//
// The first query measures the plain Pauli correlations P. Under the
// direct-cause hypothesis diag(R) = P for the channel's rotation R, which
// fixes the rotation angle and the axis up to component signs. Each sign
// class gives a modifier V that points the measurement zenith along the
// candidate axis; a channel leaves its own axis invariant, so a direct cause
// shows C33 = 1 under (V, V). States only mimic that on the plane
// sum(C_kk) = 1, so points near that plane go through a second round with the
// Y-side measurement flipped by sigma_x inside the V frame, which drives any
// direct cause to P(sigma_z) = (-1, -1, 1), far from every common-cause
// correlation.

#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qcausal/comb.hpp"

namespace qcausal {

struct AlgoConfig {
  /// Round-one cutoff on 1 - C33.
  double epsilon = 0.075;
  /// Points with |1 - sum(C_kk)| below this go to the second round.
  double delta = 0.15;
  /// Round-two cutoff on the distance to (-1, -1, 1).
  double epsilon_prime = 1.0 / std::numbers::sqrt3;
  /// 1 disables the second round.
  int max_rounds = 2;

  /// Throws InvalidInput on non-positive thresholds or max_rounds outside 1..2.
  void validate() const;
};

struct AxisCandidates {
  double cos_theta = 1.0;
  /// One representative per sign class, deduplicated up to global sign.
  std::vector<BlochVector> axes;
};

/// Candidate channel axes consistent with diag(R) = P.
AxisCandidates axis_candidates(const CorrelationVector& p);

/// V with V sigma_z V^dagger = n . sigma: the rotation taking z to n about z x n.
Mat2 modifier_from_axis(const BlochVector& n);

enum class Verdict { DC, CC };

std::string_view to_string(Verdict v);

struct TrailEntry {
  int round = 0;
  Mat2 wx;
  Mat2 wy;
  Observation observation;
};

struct ClassificationResult {
  Verdict verdict = Verdict::CC;
  /// 1 when decided by the alignment test, 2 when decided by the distance test.
  int rounds_used = 1;
  /// 1 - C33 (round one) or the distance to (-1, -1, 1) (round two), the
  /// smallest over all candidates. Every candidate is queried; the verdict is
  /// DC when this best value is under the cutoff.
  double criterion_value = 0.0;
  /// X-side modifier of the query that produced the DC verdict. In round two
  /// this is V1 V2 and the Y side used V1 sigma_x V2.
  std::optional<Mat2> winning_modifier;
  std::vector<TrailEntry> trail;
  std::size_t query_count = 0;

  /// Index into `trail` of the query behind `criterion_value`.
  std::size_t decisive_query = 0;
  /// Round-one modifier V1 whose second round produced `criterion_value`.
  std::optional<Mat2> first_round_modifier;

  const CorrelationVector& initial() const { return trail.front().observation.correlations; }
};

/// Full algorithm. Touches the scenario only through `oracle` and makes at
/// most 21 queries (round one alone needs at most 5).
ClassificationResult identify(MeasurementOracle& oracle, const AlgoConfig& cfg = {});

/// Alignment test from an already measured P: tries every axis candidate
/// under (V, V). Used by identify away from the plane; sweeps also call it
/// on plane-adjacent points to show where the test alone breaks down.
ClassificationResult alignment_round(MeasurementOracle& oracle, const CorrelationVector& p, const AlgoConfig& cfg);

/// Second round for one first-round modifier V1: queries (V1, V1 sigma_x),
/// then (V1 V2, V1 sigma_x V2) for each axis candidate of that result.
ClassificationResult second_round(MeasurementOracle& oracle, const Mat2& v1, const AlgoConfig& cfg);

/// P(sigma_z), the target of the second round.
inline const CorrelationVector kSigmaZTarget{-1.0, -1.0, 1.0};

}  // namespace qcausal
