#include "qcausal/bench.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "qcausal/parallel.hpp"
#include "qcausal/rng.hpp"
#include "qcausal/scenarios.hpp"

namespace qcausal {

using nlohmann::json;

namespace {

double sample_std(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

JointDistribution empirical(const ShotCounts& c) {
  JointDistribution d;
  const double n = static_cast<double>(c.shots());
  for (int i = 0; i < 4; ++i) d.p[i] = static_cast<double>(c.counts[i]) / n;
  return d;
}

json matrix_json(const Mat2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const CorrelationVector& p) { return json::array({p[0], p[1], p[2]}); }

MeasurementMode reseeded(const MeasurementMode& mode, std::uint64_t seed) {
  if (const auto* s = std::get_if<SampledMode>(&mode)) return SampledMode{s->shots, seed};
  return ExactMode{};
}

std::string format_param(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

struct SweepPoint {
  std::string param;
  Scenario dc;
  Scenario cc;
};

std::vector<SweepPoint> sweep_points(const SweepOptions& opts) {
  std::vector<SweepPoint> points;
  if (opts.family == Family::Edge) {
    if (opts.edge_points < 2) throw InvalidInput("edge sweep needs at least 2 points");
    for (int i = 0; i < opts.edge_points; ++i) {
      const double a = static_cast<double>(i) / (opts.edge_points - 1);
      points.push_back({format_param(a), edge_dc(a), edge_cc(a)});
    }
    return points;
  }
  if (opts.plane_denominator < 1) throw InvalidInput("plane sweep needs a positive lattice denominator");
  const int d = opts.plane_denominator;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      const int k = d - i - j;
      const std::array<double, 3> q{static_cast<double>(i) / d, static_cast<double>(j) / d,
                                    static_cast<double>(k) / d};
      const Vec3 axis(std::sqrt(q[0]), std::sqrt(q[1]), std::sqrt(q[2]));
      points.push_back({format_param(q[0]) + ":" + format_param(q[1]) + ":" + format_param(q[2]),
                        plane_dc(BlochVector::normalized(axis)), plane_cc(plane_cc_weights_for(q))});
    }
  }
  return points;
}

double criterion_of(const CorrelationVector& p) { return 1.0 - p[2]; }
double distance_of(const CorrelationVector& p) { return distance(p, kSigmaZTarget); }

std::optional<double> bootstrap_decisive(const ClassificationResult& r, const SweepOptions& opts,
                                         std::uint64_t seed, const DerivedQuantity& q) {
  const auto& counts = r.trail.at(r.decisive_query).observation.counts;
  if (!counts) return std::nullopt;
  return bootstrap_errorbars(*counts, opts.bootstrap_resamples, seed, q).quantity_std;
}

SweepRecord run_sweep_row(const SweepOptions& opts, const SweepPoint& pt, Verdict mechanism, std::size_t index) {
  const std::uint64_t mech = mechanism == Verdict::DC ? 0 : 1;
  MeasurementOracle oracle(mechanism == Verdict::DC ? pt.dc : pt.cc,
                           reseeded(opts.mode, derive_seed(opts.seed, {index, mech})));
  const ClassificationResult r = identify(oracle, opts.config);

  SweepRecord rec;
  rec.family = opts.family;
  rec.param = pt.param;
  rec.mechanism = mechanism;
  rec.initial = r.initial();
  rec.round = r.rounds_used;
  rec.verdict = r.verdict;
  rec.shots = shots_of(opts.mode);
  rec.queries = r.query_count;

  const std::uint64_t boot_seed = derive_seed(opts.seed, {index, mech, 0xB007});
  if (r.rounds_used == 1) {
    rec.criterion = r.criterion_value;
    rec.std_criterion = bootstrap_decisive(r, opts, boot_seed, criterion_of);
  } else {
    rec.distance = r.criterion_value;
    rec.std_distance = bootstrap_decisive(r, opts, boot_seed, distance_of);
    // Diagnostic only: what the alignment test alone would report here.
    const ClassificationResult diag = alignment_round(oracle, rec.initial, opts.config);
    rec.criterion = diag.criterion_value;
    rec.std_criterion = bootstrap_decisive(diag, opts, boot_seed + 1, criterion_of);
  }
  return rec;
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << std::setprecision(12) << *v;
  return os.str();
}

}  // namespace

BootstrapResult bootstrap_errorbars(const std::array<ShotCounts, 3>& counts, int resamples, std::uint64_t seed,
                                    const DerivedQuantity& quantity) {
  if (resamples < 100) throw InvalidInput("bootstrap needs at least 100 resamples");
  for (const auto& c : counts) {
    if (c.shots() <= 0) throw InvalidInput("bootstrap needs non-empty counts for every setting");
  }

  std::array<JointDistribution, 3> freq;
  for (int k = 0; k < 3; ++k) freq[k] = empirical(counts[k]);

  std::array<std::vector<double>, 3> corr;
  std::vector<double> derived;
  for (auto& v : corr) v.reserve(resamples);
  derived.reserve(resamples);

  for (int r = 0; r < resamples; ++r) {
    CorrelationVector p;
    for (int k = 0; k < 3; ++k) {
      const ShotCounts draw = sample_counts(freq[k], counts[k].shots(),
                                            derive_seed(seed, {static_cast<std::uint64_t>(r),
                                                               static_cast<std::uint64_t>(k)}));
      p[k] = correlation(draw);
      corr[k].push_back(p[k]);
    }
    if (quantity) derived.push_back(quantity(p));
  }

  BootstrapResult out;
  for (int k = 0; k < 3; ++k) out.correlation_std[k] = sample_std(corr[k]);
  out.quantity_std = sample_std(derived);
  return out;
}

std::string_view to_string(Family f) { return f == Family::Edge ? "edge" : "plane"; }

std::vector<SweepRecord> run_sweep(const SweepOptions& opts) {
  opts.config.validate();
  const std::vector<SweepPoint> points = sweep_points(opts);
  std::vector<SweepRecord> records(2 * points.size());
  parallel_for(records.size(), opts.threads, [&](std::size_t i) {
    const std::size_t point = i / 2;
    records[i] = run_sweep_row(opts, points[point], i % 2 == 0 ? Verdict::DC : Verdict::CC, point);
  });
  return records;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << kSweepCsvSchema << "\n";
  os << "family,param,mechanism,C11,C22,C33,round,criterion,distance,verdict,N,std_criterion,std_distance\n";
  os << std::setprecision(12);
  for (const auto& r : records) {
    os << to_string(r.family) << ',' << r.param << ',' << to_string(r.mechanism) << ',' << r.initial[0] << ','
       << r.initial[1] << ',' << r.initial[2] << ',' << r.round << ',' << cell(r.criterion) << ','
       << cell(r.distance) << ',' << to_string(r.verdict) << ',' << r.shots << ',' << cell(r.std_criterion) << ','
       << cell(r.std_distance) << '\n';
  }
}

json sweep_record_json(const SweepRecord& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"family", to_string(r.family)},
              {"param", r.param},
              {"mechanism", to_string(r.mechanism)},
              {"P", vector_json(r.initial)},
              {"round", r.round},
              {"criterion", opt(r.criterion)},
              {"distance", opt(r.distance)},
              {"verdict", to_string(r.verdict)},
              {"N", r.shots},
              {"std_criterion", opt(r.std_criterion)},
              {"std_distance", opt(r.std_distance)},
              {"queries", r.queries}};
}

json sweep_summary_json(const SweepOptions& opts, const std::vector<SweepRecord>& records) {
  std::int64_t correct = 0;
  std::int64_t second_round = 0;
  std::size_t max_queries = 0;
  double worst_dc = 0.0;
  double best_cc = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    correct += r.verdict == r.mechanism ? 1 : 0;
    second_round += r.round == 2 ? 1 : 0;
    max_queries = std::max(max_queries, r.queries);
    if (r.round == 1 && r.criterion) {
      if (r.mechanism == Verdict::DC) worst_dc = std::max(worst_dc, *r.criterion);
      else best_cc = std::min(best_cc, *r.criterion);
    }
  }
  return json{{"schema", "qcausal-sweep-summary v1"},
              {"family", to_string(opts.family)},
              {"rows", records.size()},
              {"correct", correct},
              {"accuracy", records.empty() ? 0.0 : static_cast<double>(correct) / records.size()},
              {"second_round_rows", second_round},
              {"max_queries", max_queries},
              {"max_dc_criterion_round1", worst_dc},
              {"min_cc_criterion_round1", std::isfinite(best_cc) ? json(best_cc) : json(nullptr)},
              {"N", shots_of(opts.mode)},
              {"seed", opts.seed},
              {"epsilon", opts.config.epsilon},
              {"delta", opts.config.delta},
              {"epsilon_prime", opts.config.epsilon_prime}};
}

double ConfusionMatrix::accuracy() const {
  const std::int64_t n = counted();
  return n == 0 ? 1.0 : static_cast<double>(dc_as_dc + cc_as_cc) / static_cast<double>(n);
}

double decision_margin(const ClassificationResult& exact, const AlgoConfig& cfg) {
  const double cutoff = exact.rounds_used == 1 ? cfg.epsilon : cfg.epsilon_prime;
  double margin = std::abs(exact.criterion_value - cutoff);
  if (cfg.max_rounds >= 2) margin = std::min(margin, std::abs(std::abs(plane_gap(exact.initial())) - cfg.delta));
  return margin;
}

Scenario random_bench_scenario(std::int64_t scenarios, std::int64_t index, std::uint64_t seed) {
  const std::int64_t n_dc = scenarios - scenarios / 2;
  const auto s = derive_seed(seed, {static_cast<std::uint64_t>(index)});
  if (index < n_dc) return haar_unitary(s);
  return random_state((index - n_dc) % 2 == 0 ? StateKind::Pure : StateKind::Mixed, s);
}

ConfusionMatrix run_random_bench(const RandomBenchOptions& opts) {
  if (opts.scenarios < 1) throw InvalidInput("random bench needs at least one scenario");
  opts.config.validate();

  struct Outcome {
    bool truth_dc = false;
    bool verdict_dc = false;
    bool excluded = false;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(opts.scenarios));

  parallel_for(outcomes.size(), opts.threads, [&](std::size_t i) {
    const Scenario s = random_bench_scenario(opts.scenarios, static_cast<std::int64_t>(i), opts.seed);
    MeasurementOracle exact_oracle(s, ExactMode{});
    const ClassificationResult exact = identify(exact_oracle, opts.config);

    Outcome o;
    o.truth_dc = is_direct_cause(s);
    o.excluded = decision_margin(exact, opts.config) < opts.eta;
    if (is_sampled(opts.mode)) {
      MeasurementOracle oracle(s, reseeded(opts.mode, derive_seed(opts.seed, {i, 0x5A3Du})));
      o.verdict_dc = identify(oracle, opts.config).verdict == Verdict::DC;
    } else {
      o.verdict_dc = exact.verdict == Verdict::DC;
    }
    outcomes[i] = o;
  });

  ConfusionMatrix m;
  for (const auto& o : outcomes) {
    if (o.excluded) {
      ++m.excluded;
      m.excluded_correct += o.truth_dc == o.verdict_dc ? 1 : 0;
      continue;
    }
    if (o.truth_dc) (o.verdict_dc ? m.dc_as_dc : m.dc_as_cc)++;
    else (o.verdict_dc ? m.cc_as_dc : m.cc_as_cc)++;
  }
  return m;
}

json confusion_json(const RandomBenchOptions& opts, const ConfusionMatrix& m) {
  return json{{"schema", "qcausal-confusion v1"},
              {"scenarios", opts.scenarios},
              {"N", shots_of(opts.mode)},
              {"eta", opts.eta},
              {"seed", opts.seed},
              {"true_dc", {{"verdict_dc", m.dc_as_dc}, {"verdict_cc", m.dc_as_cc}}},
              {"true_cc", {{"verdict_dc", m.cc_as_dc}, {"verdict_cc", m.cc_as_cc}}},
              {"excluded", m.excluded},
              {"excluded_correct", m.excluded_correct},
              {"accuracy", m.accuracy()}};
}

bool TetraReport::ok() const {
  return dc_violations == 0 && cc_mixed_violations == 0 && cc_pure_violations == 0 && vertex_error < 1e-9;
}

TetraReport run_tetra_check(std::int64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw InvalidInput("tetra-check needs at least one sample");
  TetraReport rep;
  rep.samples = samples;

  const Mat2 id = Mat2::Identity();
  for (int k = 0; k < 4; ++k) {
    rep.pauli_points[k] = pauli_vector(DirectCause(pauli(k)), id, id);
    std::array<double, 4> w{};
    w[k] = 1.0;
    rep.bell_points[k] = pauli_vector(CommonCause{bell_diagonal(w)}, id, id);
    rep.vertex_error = std::max({rep.vertex_error, (rep.pauli_points[k].c - dc_tetrahedron().vertices()[k]).norm(),
                                 (rep.bell_points[k].c - cc_tetrahedron().vertices()[k]).norm()});
  }

  std::vector<std::array<double, 3>> worst(static_cast<std::size_t>(samples));
  parallel_for(worst.size(), threads, [&](std::size_t i) {
    const auto s = derive_seed(seed, {i});
    worst[i][0] = membership_violation(pauli_vector(haar_unitary(s), id, id), dc_tetrahedron());
    worst[i][1] = membership_violation(pauli_vector(random_state(StateKind::Mixed, s), id, id), cc_tetrahedron());
    worst[i][2] = membership_violation(pauli_vector(random_state(StateKind::Pure, s), id, id), cc_tetrahedron());
  });
  for (const auto& w : worst) {
    rep.dc_violations += w[0] > rep.tolerance ? 1 : 0;
    rep.cc_mixed_violations += w[1] > rep.tolerance ? 1 : 0;
    rep.cc_pure_violations += w[2] > rep.tolerance ? 1 : 0;
    rep.dc_worst = std::max(rep.dc_worst, w[0]);
    rep.cc_mixed_worst = std::max(rep.cc_mixed_worst, w[1]);
    rep.cc_pure_worst = std::max(rep.cc_pure_worst, w[2]);
  }
  return rep;
}

json tetra_json(const TetraReport& r) {
  json pauli_pts = json::array();
  json bell_pts = json::array();
  for (int k = 0; k < 4; ++k) {
    pauli_pts.push_back(vector_json(r.pauli_points[k]));
    bell_pts.push_back(vector_json(r.bell_points[k]));
  }
  return json{{"schema", "qcausal-tetra v1"},
              {"samples", r.samples},
              {"tolerance", r.tolerance},
              {"dc", {{"violations", r.dc_violations}, {"worst", r.dc_worst}}},
              {"cc_mixed", {{"violations", r.cc_mixed_violations}, {"worst", r.cc_mixed_worst}}},
              {"cc_pure", {{"violations", r.cc_pure_violations}, {"worst", r.cc_pure_worst}}},
              {"pauli_unitary_points", pauli_pts},
              {"bell_state_points", bell_pts},
              {"vertex_error", r.vertex_error},
              {"ok", r.ok()}};
}

json classification_json(const ClassificationResult& r, const AlgoConfig& cfg, std::int64_t shots) {
  json trail = json::array();
  for (const auto& e : r.trail) {
    json entry{{"round", e.round},
               {"wx", matrix_json(e.wx)},
               {"wy", matrix_json(e.wy)},
               {"P", vector_json(e.observation.correlations)}};
    if (e.observation.counts) {
      json counts = json::array();
      for (const auto& c : *e.observation.counts) counts.push_back(c.counts);
      entry["counts"] = counts;
    }
    trail.push_back(entry);
  }
  return json{{"verdict", to_string(r.verdict)},
              {"rounds_used", r.rounds_used},
              {"criterion", r.rounds_used == 1 ? "1 - C33" : "distance to (-1,-1,1)"},
              {"criterion_value", r.criterion_value},
              {"threshold", r.rounds_used == 1 ? cfg.epsilon : cfg.epsilon_prime},
              {"P", vector_json(r.initial())},
              {"plane_gap", plane_gap(r.initial())},
              {"region", to_string(classify_region(r.initial(), sampled_membership_tolerance(shots)))},
              {"winning_modifier", r.winning_modifier ? matrix_json(*r.winning_modifier) : json(nullptr)},
              {"query_count", r.query_count},
              {"config",
               {{"epsilon", cfg.epsilon},
                {"delta", cfg.delta},
                {"epsilon_prime", cfg.epsilon_prime},
                {"max_rounds", cfg.max_rounds}}},
              {"trail", trail}};
}

}  // namespace qcausal
