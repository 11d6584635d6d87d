#include "qcausal/identify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcausal/geometry.hpp"

namespace qcausal {

namespace {

// Squared axis components at or below this count as zero, so their sign is
// not enumerated. Rounding noise in a simulated P is around 1e-16 in n_k^2.
constexpr double kZeroSquare = 1e-12;

void append(ClassificationResult& into, int round, const Mat2& wx, const Mat2& wy, Observation obs) {
  into.trail.push_back(TrailEntry{round, wx, wy, std::move(obs)});
}

/// Records a candidate query; the smallest criterion seen becomes decisive.
void consider(ClassificationResult& acc, double value, const Mat2& witness, const std::optional<Mat2>& v1) {
  if (value < acc.criterion_value) {
    acc.criterion_value = value;
    acc.decisive_query = acc.trail.size() - 1;
    acc.winning_modifier = witness;
    acc.first_round_modifier = v1;
  }
}

/// Round-two queries for one first-round modifier `v1`, appended to `acc`.
void run_second_round(MeasurementOracle& oracle, const Mat2& v1, ClassificationResult& acc) {
  // Observables are W sigma W^dagger, so the flip goes inside the V1 frame.
  const Mat2 flipped_v1 = v1 * pauli(1);
  Observation flipped = oracle.query(v1, flipped_v1);
  const CorrelationVector reference = flipped.correlations;
  append(acc, 2, v1, flipped_v1, std::move(flipped));

  for (const BlochVector& m : axis_candidates(reference).axes) {
    const Mat2 v2 = modifier_from_axis(m);
    const Mat2 w = v1 * v2;
    Observation obs = oracle.query(w, flipped_v1 * v2);
    const double d = distance(obs.correlations, kSigmaZTarget);
    append(acc, 2, w, flipped_v1 * v2, std::move(obs));
    consider(acc, d, w, v1);
  }
}

void run_alignment(MeasurementOracle& oracle, const CorrelationVector& p, ClassificationResult& acc) {
  for (const BlochVector& n : axis_candidates(p).axes) {
    const Mat2 v = modifier_from_axis(n);
    Observation obs = oracle.query(v, v);
    const double criterion = 1.0 - obs.correlations[2];
    append(acc, 1, v, v, std::move(obs));
    consider(acc, criterion, v, std::nullopt);
  }
}

/// Applies the cutoff to the best candidate; only a DC verdict keeps a witness.
void decide(ClassificationResult& acc, double cutoff) {
  acc.verdict = acc.criterion_value < cutoff ? Verdict::DC : Verdict::CC;
  if (acc.verdict == Verdict::CC) acc.winning_modifier.reset();
}

ClassificationResult fresh_result(int round) {
  ClassificationResult r;
  r.verdict = Verdict::CC;
  r.rounds_used = round;
  r.criterion_value = std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

void AlgoConfig::validate() const {
  if (!(epsilon > 0.0) || !(delta > 0.0) || !(epsilon_prime > 0.0)) {
    throw InvalidInput("epsilon, delta and epsilon_prime must be positive");
  }
  if (max_rounds < 1 || max_rounds > 2) throw InvalidInput("max_rounds must be 1 or 2");
}

AxisCandidates axis_candidates(const CorrelationVector& p) {
  AxisCandidates out;
  out.cos_theta = std::clamp(0.5 * (p.sum() - 1.0), -1.0, 1.0);
  const double one_minus_cos = 1.0 - out.cos_theta;
  if (one_minus_cos < kTolerances.validation) {
    out.axes.push_back(BlochVector::z());
    return out;
  }

  Vec3 squares;
  for (int k = 0; k < 3; ++k) squares[k] = std::clamp((p[k] - out.cos_theta) / one_minus_cos, 0.0, 1.0);
  const double total = squares.sum();
  if (total <= 0.0) {
    out.axes.push_back(BlochVector::z());
    return out;
  }
  for (int k = 0; k < 3; ++k) {
    if (squares[k] <= kZeroSquare * total) squares[k] = 0.0;
  }
  const Vec3 magnitude = (squares / squares.sum()).cwiseSqrt();

  std::vector<int> free_signs;
  int first = -1;
  for (int k = 0; k < 3; ++k) {
    if (magnitude[k] == 0.0) continue;
    if (first < 0) {
      first = k;
    } else {
      free_signs.push_back(k);
    }
  }

  const unsigned classes = 1u << free_signs.size();
  for (unsigned mask = 0; mask < classes; ++mask) {
    Vec3 n = Vec3::Zero();
    n[first] = magnitude[first];
    for (std::size_t j = 0; j < free_signs.size(); ++j) {
      const int k = free_signs[j];
      n[k] = (mask >> j & 1u) ? -magnitude[k] : magnitude[k];
    }
    out.axes.push_back(BlochVector::normalized(n));
  }
  return out;
}

Mat2 modifier_from_axis(const BlochVector& n) {
  const Vec3 z_cross_n(-n[1], n[0], 0.0);
  const double s = z_cross_n.norm();
  if (s < 1e-12) {
    if (n[2] > 0.0) return Mat2::Identity();
    return unitary_from_axis_angle(AxisAngle(BlochVector::x(), std::numbers::pi));
  }
  const double angle = std::acos(std::clamp(n[2], -1.0, 1.0));
  return unitary_from_axis_angle(AxisAngle(BlochVector::normalized(z_cross_n), angle));
}

std::string_view to_string(Verdict v) { return v == Verdict::DC ? "DC" : "CC"; }

ClassificationResult alignment_round(MeasurementOracle& oracle, const CorrelationVector& p, const AlgoConfig& cfg) {
  cfg.validate();
  ClassificationResult r = fresh_result(1);
  const std::size_t before = oracle.query_count();
  run_alignment(oracle, p, r);
  decide(r, cfg.epsilon);
  r.query_count = oracle.query_count() - before;
  return r;
}

ClassificationResult second_round(MeasurementOracle& oracle, const Mat2& v1, const AlgoConfig& cfg) {
  cfg.validate();
  ClassificationResult r = fresh_result(2);
  const std::size_t before = oracle.query_count();
  run_second_round(oracle, v1, r);
  decide(r, cfg.epsilon_prime);
  r.query_count = oracle.query_count() - before;
  return r;
}

ClassificationResult identify(MeasurementOracle& oracle, const AlgoConfig& cfg) {
  cfg.validate();
  const std::size_t before = oracle.query_count();
  const Mat2 id = Mat2::Identity();

  Observation first = oracle.query(id, id);
  const CorrelationVector p = first.correlations;
  // Points with plane_gap <= -delta lie outside the common-cause tetrahedron,
  // so only proximity on either side of the plane triggers the second round.
  const bool near_plane = std::abs(plane_gap(p)) < cfg.delta && cfg.max_rounds >= 2;

  ClassificationResult r = fresh_result(near_plane ? 2 : 1);
  append(r, 0, id, id, std::move(first));

  if (near_plane) {
    for (const BlochVector& n : axis_candidates(p).axes) run_second_round(oracle, modifier_from_axis(n), r);
    decide(r, cfg.epsilon_prime);
  } else {
    run_alignment(oracle, p, r);
    decide(r, cfg.epsilon);
  }
  r.query_count = oracle.query_count() - before;
  return r;
}

}  // namespace qcausal
