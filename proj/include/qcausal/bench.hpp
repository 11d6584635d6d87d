#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcausal/geometry.hpp"
#include "qcausal/identify.hpp"

namespace qcausal {

// ---------------------------------------------------------------------------
// Bootstrap error bars

struct BootstrapResult {
  std::array<double, 3> correlation_std{};
  /// Standard deviation of the derived quantity; zero when none was given.
  double quantity_std = 0.0;
};

using DerivedQuantity = std::function<double(const CorrelationVector&)>;

/// Multinomial resampling at the empirical frequencies of each setting's
/// counts. Requires resamples >= 100 and non-empty counts.
BootstrapResult bootstrap_errorbars(const std::array<ShotCounts, 3>& counts, int resamples, std::uint64_t seed,
                                    const DerivedQuantity& quantity = {});

inline constexpr int kDefaultBootstrapResamples = 1000;

// ---------------------------------------------------------------------------
// Sweeps

enum class Family { Edge, Plane };

std::string_view to_string(Family f);

struct SweepOptions {
  Family family = Family::Edge;
  /// Edge family: a = i / (edge_points - 1).
  int edge_points = 101;
  /// Plane family: barycentric lattice q = (i, j, k) / plane_denominator.
  int plane_denominator = 10;
  MeasurementMode mode = ExactMode{};
  AlgoConfig config;
  int bootstrap_resamples = kDefaultBootstrapResamples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct SweepRecord {
  Family family = Family::Edge;
  std::string param;
  /// Hidden mechanism that generated the row.
  Verdict mechanism = Verdict::DC;
  CorrelationVector initial;
  /// Rounds used by the verdict path.
  int round = 1;
  /// Round-one criterion 1 - C33, also evaluated for plane-adjacent points.
  std::optional<double> criterion;
  /// Round-two distance, present when the second round ran.
  std::optional<double> distance;
  Verdict verdict = Verdict::CC;
  std::int64_t shots = 0;
  std::optional<double> std_criterion;
  std::optional<double> std_distance;
  std::size_t queries = 0;
};

std::vector<SweepRecord> run_sweep(const SweepOptions& opts);

inline constexpr const char* kSweepCsvSchema = "# qcausal-sweep-csv v1";

/// Header comment, column row, then one row per record. Absent optional
/// fields are written as empty cells.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);

nlohmann::json sweep_record_json(const SweepRecord& r);
nlohmann::json sweep_summary_json(const SweepOptions& opts, const std::vector<SweepRecord>& records);

// ---------------------------------------------------------------------------
// Random benchmark

struct ConfusionMatrix {
  std::int64_t dc_as_dc = 0;
  std::int64_t dc_as_cc = 0;
  std::int64_t cc_as_dc = 0;
  std::int64_t cc_as_cc = 0;
  /// Scenarios whose exact-mode decision lies within eta of a threshold.
  std::int64_t excluded = 0;
  std::int64_t excluded_correct = 0;

  std::int64_t counted() const { return dc_as_dc + dc_as_cc + cc_as_dc + cc_as_cc; }
  std::int64_t total() const { return counted() + excluded; }
  double accuracy() const;
  bool operator==(const ConfusionMatrix&) const = default;
};

struct RandomBenchOptions {
  std::int64_t scenarios = 1000;
  MeasurementMode mode = ExactMode{};
  double eta = 1e-3;
  std::uint64_t seed = 0;
  AlgoConfig config;
  unsigned threads = 0;
};

/// Distance of an exact-mode run from flipping: the smaller of the
/// criterion's distance to its cutoff and |plane_gap| to delta.
double decision_margin(const ClassificationResult& exact, const AlgoConfig& cfg);

/// Scenario i of the ensemble: the first scenarios - scenarios/2 are Haar
/// channels, the rest alternate Haar pure and Hilbert-Schmidt mixed states.
Scenario random_bench_scenario(std::int64_t scenarios, std::int64_t index, std::uint64_t seed);

ConfusionMatrix run_random_bench(const RandomBenchOptions& opts);

nlohmann::json confusion_json(const RandomBenchOptions& opts, const ConfusionMatrix& m);

// ---------------------------------------------------------------------------
// Tetrahedron membership check

struct TetraReport {
  std::int64_t samples = 0;
  double tolerance = kTolerances.membership;
  std::int64_t dc_violations = 0;
  double dc_worst = 0.0;
  std::int64_t cc_mixed_violations = 0;
  double cc_mixed_worst = 0.0;
  std::int64_t cc_pure_violations = 0;
  double cc_pure_worst = 0.0;
  std::array<CorrelationVector, 4> pauli_points;
  std::array<CorrelationVector, 4> bell_points;
  /// Largest deviation of pauli_points / bell_points from the tetrahedron vertices.
  double vertex_error = 0.0;

  bool ok() const;
};

TetraReport run_tetra_check(std::int64_t samples, std::uint64_t seed, unsigned threads = 0);

nlohmann::json tetra_json(const TetraReport& r);

// ---------------------------------------------------------------------------

/// `shots` sets the membership tolerance used for the region label (0 = exact).
nlohmann::json classification_json(const ClassificationResult& r, const AlgoConfig& cfg, std::int64_t shots = 0);

}  // namespace qcausal
