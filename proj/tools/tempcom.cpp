// tempcom: generate temporal networks, test them for community structure,
// and run simulation sweeps.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempcom/tempcom.hpp"

#ifndef TEMPCOM_PRESET_DIR
#define TEMPCOM_PRESET_DIR "presets"
#endif

namespace fs = std::filesystem;
using namespace tempcom;

namespace {

enum Exit { ok = 0, usage = 1, data = 2, internal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Calibrator calibrator_arg(const std::string& s) {
  try {
    return Calibrator::parse(s);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> numbers_arg(const std::string& key, const std::string& s) {
  try {
    return detail::parse_numbers(key, s);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw DataError("cannot write " + p.string());
  return out;
}

// ---- generate ----

struct GenerateArgs {
  std::string model = "corr-sbm";
  std::size_t n = 1000, T = 10, k = 2;
  std::uint64_t seed = 1;
  double p = 0.01, b = 0.01, delta = 0.0, rho = 0.25, fraction = 0.8, epsilon = 0.6;
  std::string pi = "0.9,0.1;0.1,0.9", alpha = "0.8,0.2";
  std::string config, out;
};

void write_labels(std::ostream& out, const DynamicLabels& labels) {
  out << "node,t,group\n";
  for (std::size_t t = 0; t < labels.size(); ++t)
    for (std::size_t i = 0; i < labels[t].size(); ++i) out << i << ',' << t << ',' << labels[t][i] + 1 << '\n';
}

void write_weights(std::ostream& out, const std::vector<DegreeWeights>& ws) {
  out << "node,t,theta\n";
  char buf[40];
  for (std::size_t t = 0; t < ws.size(); ++t)
    for (std::size_t i = 0; i < ws[t].theta.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", ws[t].theta[i]);
      out << i << ',' << t << ',' << buf << '\n';
    }
}

int run_generate(GenerateArgs a) {
  if (!a.config.empty()) {
    // model parameters from a config file; command-line model/n/t/seed still apply
    const auto cfg = load_config(a.config, Scale::full);
    a.k = cfg.K;
    a.b = cfg.b;
    a.delta = cfg.delta;
    a.rho = cfg.rho;
    a.fraction = cfg.group1_fraction;
    a.epsilon = cfg.epsilon;
    auto join = [](const std::vector<double>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + detail::format_number(v[i]);
      return s;
    };
    a.pi = join(cfg.pi);
    a.alpha = join(cfg.alpha);
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);

  std::vector<Snapshot> snaps;
  DynamicLabels labels;
  std::vector<DegreeWeights> weights;
  const MarkovLabelChain chain{numbers_arg("pi", a.pi), numbers_arg("alpha", a.alpha)};
  const std::size_t k = a.model == "corr-sbm" || a.model == "sbm" ? 2 : chain.num_groups();
  const BlockMatrix block = BlockMatrix::planted(k, a.b, a.delta);

  if (a.model == "er") {
    for (std::size_t t = 0; t < a.T; ++t) snaps.push_back(sample_er(a.n, a.p, derive_seed(a.seed, {t})));
  } else if (a.model == "cl") {
    for (std::size_t t = 0; t < a.T; ++t) {
      Rng rng(derive_seed(a.seed, {t}));
      weights.push_back(sample_degree_weights(a.n, a.epsilon, rng));
      snaps.push_back(sample_chung_lu(weights.back().theta, a.p, rng));
    }
  } else if (a.model == "sbm") {
    const auto c = CommunityLabels::two_groups(a.n, a.fraction);
    for (std::size_t t = 0; t < a.T; ++t) snaps.push_back(sample_sbm(c, block, derive_seed(a.seed, {t})));
    labels.assign(a.T, c);
  } else if (a.model == "corr-sbm") {
    const auto c = CommunityLabels::two_groups(a.n, a.fraction);
    auto net = sample_correlated_sbm(c, block, a.rho, a.T, a.seed);
    for (std::size_t t = 0; t < a.T; ++t) snaps.push_back(net[t]);
    labels.assign(a.T, c);
  } else if (a.model == "dyn-sbm") {
    auto draw = sample_dynamic_sbm(chain, block, a.n, a.T, a.seed);
    for (std::size_t t = 0; t < a.T; ++t) snaps.push_back(draw.network[t]);
    labels = std::move(draw.labels);
  } else if (a.model == "dyn-dcbm") {
    auto draw = sample_dynamic_dcbm(chain, block, a.epsilon, a.n, a.T, a.seed);
    for (std::size_t t = 0; t < a.T; ++t) snaps.push_back(draw.network[t]);
    labels = std::move(draw.labels);
    weights = std::move(draw.weights);
  } else {
    throw UsageError("unknown model '" + a.model + "'");
  }

  auto events = open_out(dir / "events.txt");
  events << "# src dst t (t = snapshot index)\n";
  for (std::size_t t = 0; t < snaps.size(); ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%03zu.txt", t);
    auto out = open_out(dir / name);
    write_snapshot(out, snaps[t], t);
    for (const auto& e : snaps[t].edges()) events << e.u << ' ' << e.v << ' ' << t << '\n';
  }
  if (!labels.empty()) {
    auto out = open_out(dir / "labels.csv");
    write_labels(out, labels);
  }
  if (!weights.empty()) {
    auto out = open_out(dir / "weights.csv");
    write_weights(out, weights);
  }
  std::size_t edges = 0;
  for (const auto& s : snaps) edges += s.num_edges();
  std::cout << "wrote " << snaps.size() << " snapshots (" << edges << " edges) to " << dir.string() << '\n';
  return ok;
}

// ---- test ----

struct TestArgs {
  std::string input, json_out, diagnostics, partitions, tw_table, eigen_side = "algebraic";
  std::size_t bins = 5, boot = 0, nodes = 0;
  std::string static_test = "e2d2", calibrator = "kappa:0.25";
  double threshold = 20.0;
  std::uint64_t seed = 1;
  bool relabel = false, add_one = false, assume_independent = false;
};

// Snapshot files snapshot_*.txt in name order.
TemporalNetwork read_snapshot_dir(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.rfind("snapshot_", 0) == 0 && e.path().extension() == ".txt") files.push_back(e.path());
  }
  if (files.empty()) throw DataError(dir.string() + ": no snapshot_*.txt files");
  std::sort(files.begin(), files.end());
  std::vector<Snapshot> snaps;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw DataError("cannot open " + f.string());
    snaps.push_back(parse_snapshot(in, f.string()));
  }
  try {
    return TemporalNetwork(std::move(snaps));
  } catch (const InvalidInput& e) {
    throw DataError(dir.string() + ": " + e.what());
  }
}

int run_test(const TestArgs& a) {
  StaticTestOptions opts;
  opts.kind = parse_static_test(a.static_test);
  opts.n_boot = a.boot;
  opts.add_one = a.add_one;
  opts.side = a.eigen_side == "magnitude" ? EigenSide::magnitude : EigenSide::algebraic;
  std::optional<Tw1Reference> table;
  if (!a.tw_table.empty()) {
    table = Tw1Reference::load(a.tw_table);
    opts.reference = &*table;
  }
  const Calibrator cal = calibrator_arg(a.calibrator);

  TemporalTestResult res;
  nlohmann::json extra;
  if (fs::is_directory(a.input)) {
    const auto net = read_snapshot_dir(a.input);
    res = run_temporal_test(net, opts, cal, a.threshold, a.seed, a.assume_independent);
    extra["num_nodes"] = net.num_nodes();
  } else {
    RealDataOptions ro;
    ro.bins = a.bins;
    ro.test = opts;
    ro.calibrator = cal;
    ro.threshold = a.threshold;
    ro.seed = a.seed;
    ro.relabel = a.relabel;
    ro.nodes = a.nodes;
    ro.assume_independent = a.assume_independent;
    auto real = run_real(a.input, ro);
    res = std::move(real.test);
    extra["num_nodes"] = real.binned.network.num_nodes();
    extra["num_events"] = real.events.events.size();
    nlohmann::json win = nlohmann::json::array();
    for (const auto& [lo, hi] : real.binned.windows) win.push_back({lo, hi});
    extra["windows"] = win;
  }

  auto j = to_json(res.report);
  j["seed"] = a.seed;
  j["n_boot"] = opts.n_boot ? opts.n_boot : (opts.kind == StaticTest::tw ? 50 : 1000);
  for (auto& [key, value] : extra.items()) j[key] = value;
  j["diagnostics"] = res.diagnostics;
  if (!a.json_out.empty()) {
    auto out = open_out(a.json_out);
    out << j.dump(2) << '\n';
  }
  if (!a.diagnostics.empty()) {
    auto out = open_out(a.diagnostics);
    for (const auto& d : res.diagnostics) out << d.dump() << '\n';
  }

  if (!a.partitions.empty()) {
    fs::create_directories(a.partitions);
    for (std::size_t t = 0; t < res.partitions.size(); ++t) {
      if (res.partitions[t].empty()) continue;
      char name[32];
      std::snprintf(name, sizeof name, "partition_%03zu.csv", t);
      auto out = open_out(fs::path(a.partitions) / name);
      out << res.partitions[t];
    }
  }

  const auto& r = res.report;
  std::printf("%-6s %-12s %-12s %-12s\n", "t", "p-value", "e-value", "loo-mean");
  for (std::size_t t = 0; t < r.pvalues.size(); ++t)
    std::printf("%-6zu %-12.6g %-12.6g %-12.6g\n", t + 1, r.pvalues[t], r.evalues[t], r.loo[t]);
  std::printf("combined e-value (%s, %s): %.6g  threshold %.6g  -> %s\n", r.static_test.c_str(),
              r.calibrator.c_str(), r.combined, r.threshold, r.reject ? "reject" : "do not reject");
  if (r.product) std::printf("product e-value (independence assumed): %.6g\n", *r.product);
  return ok;
}

// ---- experiment ----

struct ExperimentArgs {
  std::string preset, config, out, scale = "full", preset_dir = TEMPCOM_PRESET_DIR;
  std::size_t threads = 0, reps = 0;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

int run_experiment(const ExperimentArgs& a) {
  if (a.preset.empty() == a.config.empty()) throw UsageError("give exactly one of --preset or --config");
  const Scale scale = a.scale == "desk" ? Scale::desk : Scale::full;
  ExperimentConfig cfg =
      a.preset.empty() ? load_config(a.config, scale) : load_preset(a.preset, a.preset_dir, scale);
  if (a.threads) cfg.threads = a.threads;
  if (a.reps) cfg.mc_reps = a.reps;
  if (a.seed) cfg.seed = *a.seed;

  if (!a.quiet)
    std::cerr << cfg.name << ": " << to_string(cfg.model) << ", " << cfg.grid.size() << " settings x "
              << cfg.mc_reps << " replicates\n";
  std::size_t last_pct = 101;
  const auto result = run_sweep(cfg, [&](std::size_t done, std::size_t total) {
    if (a.quiet) return;
    const std::size_t pct = 100 * done / total;
    if (pct / 10 != last_pct / 10 || done == total) {
      std::cerr << "  " << done << "/" << total << " replicates\n";
      last_pct = pct;
    }
  });
  emit_csv(result, a.out);
  {
    auto out = open_out(fs::path(a.out) / "config.txt");
    out << describe(cfg);
  }

  std::printf("%-16s", "setting");
  for (const auto& c : result.calibrators) std::printf(" %12s", c.c_str());
  std::printf("\n");
  for (std::size_t s = 0; s < result.settings.size(); ++s) {
    std::printf("%-16s", result.settings[s].c_str());
    for (const auto& cell : result.cells[s]) std::printf(" %12.4g", cell.median);
    if (result.failures[s]) std::printf("  (%zu failed)", result.failures[s]);
    std::printf("\n");
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test temporal networks for community structure with calibrated e-values"};
  app.require_subcommand(1);

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Sample a temporal network");
  gen->add_option("--model", ga.model, "er, cl, sbm, corr-sbm, dyn-sbm or dyn-dcbm")
      ->check(CLI::IsMember({"er", "cl", "sbm", "corr-sbm", "dyn-sbm", "dyn-dcbm"}))
      ->capture_default_str();
  gen->add_option("--n", ga.n, "Number of nodes")->capture_default_str();
  gen->add_option("--t", ga.T, "Number of snapshots")->capture_default_str();
  gen->add_option("--seed", ga.seed, "Master seed")->capture_default_str();
  gen->add_option("--p", ga.p, "Edge probability (er) or weight scale (cl)")->capture_default_str();
  gen->add_option("--b", ga.b, "Between-group edge probability")->capture_default_str();
  gen->add_option("--delta", ga.delta, "Within-group excess probability")->capture_default_str();
  gen->add_option("--rho", ga.rho, "Lag-1 edge correlation (corr-sbm)")->capture_default_str();
  gen->add_option("--fraction", ga.fraction, "Share of nodes in group 1 (sbm, corr-sbm)")->capture_default_str();
  gen->add_option("--pi", ga.pi, "Label transition matrix, rows separated by ';'")->capture_default_str();
  gen->add_option("--alpha", ga.alpha, "Initial label distribution")->capture_default_str();
  gen->add_option("--epsilon", ga.epsilon, "Weight spread (cl, dyn-dcbm)")->capture_default_str();
  gen->add_option("--config", ga.config, "Read model parameters from a config file")->check(CLI::ExistingFile);
  gen->add_option("--out", ga.out, "Output directory")->required();

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Run the temporal community test");
  test->add_option("--input", ta.input, "Timestamped edge list, or a directory of snapshot files")
      ->required()
      ->check(CLI::ExistingPath);
  test->add_option("--bins", ta.bins, "Number of snapshots T for an edge list")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  test->add_option("--static", ta.static_test, "Static test: tw or e2d2")
      ->check(CLI::IsMember({"tw", "e2d2"}))
      ->capture_default_str();
  test->add_option("--calibrator", ta.calibrator, "max, avg or kappa:X")->capture_default_str();
  test->add_option("--threshold", ta.threshold, "Rejection threshold")->capture_default_str();
  test->add_option("--boot", ta.boot, "Bootstrap replicates (default 50 for tw, 1000 for e2d2)");
  test->add_option("--seed", ta.seed, "Master seed")->capture_default_str();
  test->add_option("--json", ta.json_out, "Write the report as JSON");
  test->add_option("--diagnostics", ta.diagnostics, "Write per-snapshot diagnostics as JSON lines");
  test->add_option("--partitions", ta.partitions, "Write the e2d2 maximising partition of each snapshot here");
  test->add_option("--nodes", ta.nodes, "Number of nodes (default: largest id + 1)");
  test->add_flag("--relabel", ta.relabel, "Map arbitrary node tokens to dense ids");
  test->add_option("--tw-table", ta.tw_table, "Tracy-Widom CDF table to use instead of the built-in one")
      ->check(CLI::ExistingFile);
  test->add_option("--eigen-side", ta.eigen_side, "Eigenvalue of A - P used by tw: algebraic or magnitude")
      ->check(CLI::IsMember({"algebraic", "magnitude"}))
      ->capture_default_str();
  test->add_flag("--add-one", ta.add_one, "Use (hits + 1) / (B + 1) for e2d2 p-values");
  test->add_flag("--assume-independent", ta.assume_independent, "Also report the product of e-values");

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Run a simulation sweep");
  exp->add_option("--preset", ea.preset, "Preset name");
  exp->add_option("--config", ea.config, "Config file")->check(CLI::ExistingFile);
  exp->add_option("--out", ea.out, "Output directory")->required();
  exp->add_option("--scale", ea.scale, "desk or full")
      ->check(CLI::IsMember({"desk", "full"}))
      ->capture_default_str();
  exp->add_option("--preset-dir", ea.preset_dir, "Directory holding preset files")->capture_default_str();
  exp->add_option("--threads", ea.threads, "Worker threads (default: all cores)");
  exp->add_option("--reps", ea.reps, "Override the number of replicates");
  exp->add_option("--seed", ea.seed, "Override the master seed");
  exp->add_flag("--quiet", ea.quiet, "No progress output");

  double cal_p = 0.0;
  std::string cal_spec;
  auto* cal = app.add_subcommand("calibrate", "Map a p-value to an e-value");
  cal->add_option("--p", cal_p, "p-value")->required()->check(CLI::Range(0.0, 1.0));
  cal->add_option("--calibrator", cal_spec, "max, avg or kappa:X")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*gen) return run_generate(ga);
    if (*test) return run_test(ta);
    if (*exp) return run_experiment(ea);
    if (*cal) {
      const Calibrator c = calibrator_arg(cal_spec);
      std::printf("%s\n", detail::format_number(c(cal_p)).c_str());
      return ok;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const SweepAborted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
