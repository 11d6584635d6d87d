// qcausal: command-line driver for the causal identification benchmarks.
//
//   qcausal identify scenario.json [--mode exact|shots=N] [--seed S]
//   qcausal sweep --family edge|plane [--points 101] [--denominator 10] [--out sweep.csv]
//   qcausal random-bench --n 1000 --eta 1e-3 [--mode shots=100000]
//   qcausal tetra-check --samples 10000
//
// Every flag can also be set through an environment variable QCAUSAL_<FLAG>,
// e.g. QCAUSAL_MODE=shots=100000 or QCAUSAL_EPSILON_PRIME=0.5.
//
// Exit codes: identify returns 0 for DC and 1 for CC; the other commands
// return 0 on success and 1 when a check fails. Any error returns 2.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcausal/bench.hpp"
#include "qcausal/scenario_json.hpp"

namespace {

using namespace qcausal;

constexpr int kExitError = 2;

struct CommonFlags {
  std::string mode = "exact";
  std::uint64_t seed = 0;
  AlgoConfig config;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f, const std::string& default_format) {
  f.format = default_format;
  cmd->add_option("--mode", f.mode, "exact or shots=N")->envname("QCAUSAL_MODE")->capture_default_str();
  cmd->add_option("--seed", f.seed, "base seed")->envname("QCAUSAL_SEED")->capture_default_str();
  cmd->add_option("--epsilon", f.config.epsilon, "round-one cutoff on 1 - C33")
      ->envname("QCAUSAL_EPSILON")
      ->capture_default_str();
  cmd->add_option("--delta", f.config.delta, "plane proximity threshold")
      ->envname("QCAUSAL_DELTA")
      ->capture_default_str();
  cmd->add_option("--epsilon-prime", f.config.epsilon_prime, "round-two distance cutoff")
      ->envname("QCAUSAL_EPSILON_PRIME")
      ->capture_default_str();
  cmd->add_option("--max-rounds", f.config.max_rounds, "1 disables the second round")
      ->envname("QCAUSAL_MAX_ROUNDS")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "output path (default stdout)")->envname("QCAUSAL_OUT");
  cmd->add_option("--format", f.format, "csv or json")
      ->envname("QCAUSAL_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)")->envname("QCAUSAL_THREADS");
}

MeasurementMode parse_mode(const std::string& text, std::uint64_t seed) {
  if (text == "exact") return ExactMode{};
  const std::string prefix = "shots=";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    long long n = 0;
    try {
      n = std::stoll(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() - prefix.size() && n > 0) return SampledMode{n, seed};
  }
  throw InvalidInput("--mode must be 'exact' or 'shots=N' with N >= 1, got '" + text + "'");
}

/// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const std::string& out, Fn&& write) {
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidInput("cannot open output file: " + out);
  write(f);
  if (!f) throw InvalidInput("failed writing output file: " + out);
}

int cmd_identify(const std::string& path, const CommonFlags& f) {
  f.config.validate();
  const MeasurementMode mode = parse_mode(f.mode, f.seed);
  MeasurementOracle oracle(load_scenario(path), mode);
  const ClassificationResult r = identify(oracle, f.config);
  emit(f.out, [&](std::ostream& os) { os << classification_json(r, f.config, shots_of(mode)).dump(2) << "\n"; });
  return r.verdict == Verdict::DC ? 0 : 1;
}

int cmd_sweep(const std::string& family, int points, int denominator, int resamples, const CommonFlags& f) {
  SweepOptions opts;
  if (family == "edge") opts.family = Family::Edge;
  else if (family == "plane") opts.family = Family::Plane;
  else throw InvalidInput("--family must be edge or plane");
  opts.edge_points = points;
  opts.plane_denominator = denominator;
  opts.mode = parse_mode(f.mode, f.seed);
  opts.config = f.config;
  opts.bootstrap_resamples = resamples;
  opts.seed = f.seed;
  opts.threads = f.threads;

  const auto records = run_sweep(opts);
  const auto summary = sweep_summary_json(opts, records);
  if (f.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) rows.push_back(sweep_record_json(r));
    emit(f.out, [&](std::ostream& os) { os << nlohmann::json{{"summary", summary}, {"records", rows}}.dump(2) << "\n"; });
  } else {
    emit(f.out, [&](std::ostream& os) { write_sweep_csv(os, records); });
    if (f.out.empty()) {
      std::cerr << summary.dump(2) << "\n";
    } else {
      emit(f.out + ".summary.json", [&](std::ostream& os) { os << summary.dump(2) << "\n"; });
    }
  }
  return 0;
}

int cmd_random_bench(std::int64_t n, double eta, const CommonFlags& f) {
  RandomBenchOptions opts;
  opts.scenarios = n;
  opts.eta = eta;
  opts.seed = f.seed;
  opts.mode = parse_mode(f.mode, f.seed);
  opts.config = f.config;
  opts.threads = f.threads;
  const ConfusionMatrix m = run_random_bench(opts);
  if (f.format == "json") {
    emit(f.out, [&](std::ostream& os) { os << confusion_json(opts, m).dump(2) << "\n"; });
  } else {
    emit(f.out, [&](std::ostream& os) {
      os << "# qcausal-confusion-csv v1\n"
         << "truth,verdict_dc,verdict_cc\n"
         << "DC," << m.dc_as_dc << ',' << m.dc_as_cc << '\n'
         << "CC," << m.cc_as_dc << ',' << m.cc_as_cc << '\n'
         << "# excluded=" << m.excluded << " excluded_correct=" << m.excluded_correct
         << " accuracy=" << m.accuracy() << '\n';
    });
  }
  return 0;
}

int cmd_tetra_check(std::int64_t samples, const CommonFlags& f) {
  const TetraReport r = run_tetra_check(samples, f.seed, f.threads);
  emit(f.out, [&](std::ostream& os) { os << tetra_json(r).dump(2) << "\n"; });
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observational identification of direct versus common cause in two-qubit correlations"};
  app.require_subcommand(1);

  CommonFlags identify_flags, sweep_flags, bench_flags, tetra_flags;

  std::string scenario_path;
  auto* identify_cmd = app.add_subcommand("identify", "classify one scenario file");
  identify_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  add_common(identify_cmd, identify_flags, "json");

  std::string family = "edge";
  int points = 101;
  int denominator = 10;
  int resamples = kDefaultBootstrapResamples;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a scenario family sweep");
  sweep_cmd->add_option("--family", family, "edge or plane")->envname("QCAUSAL_FAMILY")->capture_default_str();
  sweep_cmd->add_option("--points", points, "edge grid size")->envname("QCAUSAL_POINTS")->capture_default_str();
  sweep_cmd->add_option("--denominator", denominator, "plane lattice denominator")
      ->envname("QCAUSAL_DENOMINATOR")
      ->capture_default_str();
  sweep_cmd->add_option("--resamples", resamples, "bootstrap resamples")
      ->envname("QCAUSAL_RESAMPLES")
      ->capture_default_str();
  add_common(sweep_cmd, sweep_flags, "csv");

  std::int64_t bench_n = 1000;
  double eta = 1e-3;
  auto* bench_cmd = app.add_subcommand("random-bench", "confusion matrix over random scenarios");
  bench_cmd->add_option("--n", bench_n, "number of scenarios")->envname("QCAUSAL_N")->capture_default_str();
  bench_cmd->add_option("--eta", eta, "exclusion margin")->envname("QCAUSAL_ETA")->capture_default_str();
  add_common(bench_cmd, bench_flags, "json");

  std::int64_t samples = 10000;
  auto* tetra_cmd = app.add_subcommand("tetra-check", "check tetrahedron membership of sampled correlations");
  tetra_cmd->add_option("--samples", samples, "samples per ensemble")
      ->envname("QCAUSAL_SAMPLES")
      ->capture_default_str();
  add_common(tetra_cmd, tetra_flags, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*identify_cmd) return cmd_identify(scenario_path, identify_flags);
    if (*sweep_cmd) return cmd_sweep(family, points, denominator, resamples, sweep_flags);
    if (*bench_cmd) return cmd_random_bench(bench_n, eta, bench_flags);
    if (*tetra_cmd) return cmd_tetra_check(samples, tetra_flags);
  } catch (const std::exception& e) {
    std::cerr << "qcausal: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
