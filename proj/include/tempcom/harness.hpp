#pragma once

// Monte Carlo experiment sweeps over the temporal block models, the
// real-data pipeline, and their file formats.
//
// Config files are flat `key = value` text. Keys prefixed `desk.` or
// `full.` apply only at that scale and override the unprefixed value.
//
// Seeds: replicate r at grid point g generates its network from
// derive_seed(seed, {generate, g, r}) and tests it with
// derive_seed(seed, {static_test, g, r}); the outcome is therefore the same
// whatever the worker count or schedule.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tempcom/error.hpp"
#include "tempcom/evalue.hpp"
#include "tempcom/generators.hpp"
#include "tempcom/graph.hpp"
#include "tempcom/rng.hpp"
#include "tempcom/temporal_test.hpp"

namespace tempcom {

enum class Model { corr_sbm, dyn_sbm, dyn_dcbm };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::corr_sbm: return "corr-sbm";
    case Model::dyn_sbm: return "dyn-sbm";
    case Model::dyn_dcbm: return "dyn-dcbm";
  }
  return {};
}

inline Model parse_model(const std::string& s) {
  if (s == "corr-sbm") return Model::corr_sbm;
  if (s == "dyn-sbm") return Model::dyn_sbm;
  if (s == "dyn-dcbm") return Model::dyn_dcbm;
  throw DataError("unknown model '" + s + "' (expected corr-sbm, dyn-sbm or dyn-dcbm)");
}

enum class Scale { full, desk };

struct ExperimentConfig {
  std::string name = "experiment";
  Model model = Model::corr_sbm;
  std::size_t n = 1000;
  std::size_t T = 10;
  std::size_t K = 2;
  double b = 0.01;
  double delta = 0.0;
  double rho = 0.25;
  double group1_fraction = 0.8;
  std::vector<double> pi{0.9, 0.1, 0.1, 0.9};
  std::vector<double> alpha{0.8, 0.2};
  double epsilon = 0.6;
  std::size_t mc_reps = 100;
  std::vector<Calibrator> calibrators{Calibrator::max(), Calibrator::avg(), Calibrator::kappa(0.25),
                                      Calibrator::kappa(0.5), Calibrator::kappa(0.75)};
  StaticTest static_test = StaticTest::tw;
  std::size_t n_boot = 0;
  double threshold = 20.0;
  std::uint64_t seed = 1;
  std::string vary = "delta";  // delta, n or none
  std::vector<double> grid{0.0};
  std::size_t threads = 0;     // 0: hardware concurrency

  void validate() const {
    if (n < 10) throw DataError("n must be at least 10");
    if (T == 0) throw DataError("T must be positive");
    if (mc_reps == 0) throw DataError("mc_reps must be at least 1");
    if (calibrators.empty()) throw DataError("at least one calibrator is required");
    if (vary != "delta" && vary != "n" && vary != "none") throw DataError("vary must be delta, n or none");
    if (grid.empty()) throw DataError("empty parameter grid");
    if (model != Model::corr_sbm && (pi.size() != K * K || alpha.size() != K))
      throw DataError("pi must be K x K and alpha length K");
    if (model == Model::corr_sbm && K != 2) throw DataError("corr-sbm uses two groups");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw DataError("config key '" + key + "': not a number: '" + v + "'");
  return x;
}

inline std::size_t to_size(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x < 0 || x != std::floor(x)) throw DataError("config key '" + key + "': not a non-negative integer");
  return static_cast<std::size_t>(x);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

// "a:step:b" (inclusive) or "x, y, z".
inline std::vector<double> parse_grid(const std::string& key, const std::string& v) {
  std::vector<double> out;
  if (v.find(':') != std::string::npos) {
    auto parts = split(v, ':');
    if (parts.size() != 3) throw DataError("config key '" + key + "': range must be start:step:stop");
    const double a = to_double(key, parts[0]), step = to_double(key, parts[1]), b = to_double(key, parts[2]);
    if (!(step > 0.0) || b < a) throw DataError("config key '" + key + "': invalid range");
    const auto count = static_cast<std::size_t>(std::llround((b - a) / step)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(a + step * static_cast<double>(i));
    return out;
  }
  for (const auto& item : split(v, ',')) out.push_back(to_double(key, item));
  return out;
}

inline std::vector<double> parse_numbers(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& row : split(v, ';'))
    for (const auto& item : split(row, ',')) out.push_back(to_double(key, item));
  return out;
}

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_number(const std::string& s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return to_double("csv", s);
}

inline std::string grid_label(const std::string& vary, double v) {
  if (vary == "none") return "base";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s=%.6g", vary.c_str(), v);
  return buf;
}

}  // namespace detail

inline void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  using namespace detail;
  if (key == "name") cfg.name = value;
  else if (key == "model") cfg.model = parse_model(value);
  else if (key == "n") cfg.n = to_size(key, value);
  else if (key == "t") cfg.T = to_size(key, value);
  else if (key == "k") cfg.K = to_size(key, value);
  else if (key == "b") cfg.b = to_double(key, value);
  else if (key == "delta") cfg.delta = to_double(key, value);
  else if (key == "rho") cfg.rho = to_double(key, value);
  else if (key == "group1_fraction") cfg.group1_fraction = to_double(key, value);
  else if (key == "pi") cfg.pi = parse_numbers(key, value);
  else if (key == "alpha") cfg.alpha = parse_numbers(key, value);
  else if (key == "epsilon") cfg.epsilon = to_double(key, value);
  else if (key == "mc_reps") cfg.mc_reps = to_size(key, value);
  else if (key == "n_boot") cfg.n_boot = to_size(key, value);
  else if (key == "threshold") cfg.threshold = to_double(key, value);
  else if (key == "seed") cfg.seed = std::stoull(value);
  else if (key == "vary") cfg.vary = value;
  else if (key == "grid") cfg.grid = parse_grid(key, value);
  else if (key == "threads") cfg.threads = to_size(key, value);
  else if (key == "static_test") {
    try {
      cfg.static_test = parse_static_test(value);
    } catch (const InvalidInput& e) {
      throw DataError(e.what());
    }
  } else if (key == "calibrators") {
    cfg.calibrators.clear();
    try {
      for (const auto& c : split(value, ',')) cfg.calibrators.push_back(Calibrator::parse(c));
    } catch (const InvalidInput& e) {
      throw DataError(e.what());
    }
  } else {
    throw DataError("unknown config key '" + key + "'");
  }
}

inline ExperimentConfig parse_config(std::istream& in, Scale scale, const std::string& source = "<config>") {
  ExperimentConfig cfg;
  std::vector<std::pair<std::string, std::string>> base, scaled;
  const std::string wanted = scale == Scale::desk ? "desk." : "full.";
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw DataError(source + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim(t.substr(0, eq));
    const std::string value = detail::trim(t.substr(eq + 1));
    if (key.rfind("desk.", 0) == 0 || key.rfind("full.", 0) == 0) {
      if (key.rfind(wanted, 0) == 0) scaled.emplace_back(key.substr(5), value);
      continue;
    }
    base.emplace_back(std::move(key), value);
  }
  try {
    for (const auto& [k, v] : base) apply_config_value(cfg, k, v);
    for (const auto& [k, v] : scaled) apply_config_value(cfg, k, v);
  } catch (const DataError& e) {
    throw DataError(source + ": " + e.what());
  }
  cfg.validate();
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path, Scale scale) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config " + path);
  return parse_config(in, scale, path);
}

inline ExperimentConfig load_preset(const std::string& name, const std::string& preset_dir, Scale scale) {
  const auto path = std::filesystem::path(preset_dir) / (name + ".cfg");
  if (!std::filesystem::exists(path)) throw DataError("unknown preset '" + name + "' (looked in " + preset_dir + ")");
  return load_config(path.string(), scale);
}

// Network for one grid point of a sweep.
inline TemporalNetwork generate_network(const ExperimentConfig& cfg, std::size_t n, double delta,
                                        std::uint64_t seed) {
  const BlockMatrix b = BlockMatrix::planted(cfg.K, cfg.b, delta);
  switch (cfg.model) {
    case Model::corr_sbm:
      return sample_correlated_sbm(CommunityLabels::two_groups(n, cfg.group1_fraction), b, cfg.rho, cfg.T, seed);
    case Model::dyn_sbm:
      return sample_dynamic_sbm({cfg.pi, cfg.alpha}, b, n, cfg.T, seed).network;
    case Model::dyn_dcbm:
      return sample_dynamic_dcbm({cfg.pi, cfg.alpha}, b, cfg.epsilon, n, cfg.T, seed).network;
  }
  throw InvalidInput("unknown model");
}

struct SweepCell {
  std::vector<std::size_t> replicate;  // replicate indices that succeeded
  std::vector<double> evalue;
  double median = 0.0;
  std::size_t infinite = 0;
};

struct SweepResult {
  std::vector<std::string> settings;
  std::vector<std::string> calibrators;
  std::vector<std::vector<SweepCell>> cells;  // [setting][calibrator]
  std::vector<std::size_t> failures;          // per setting
};

inline double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

inline void finalize_cell(SweepCell& c) {
  c.median = median_of(c.evalue);
  c.infinite = static_cast<std::size_t>(std::count_if(c.evalue.begin(), c.evalue.end(), [](double e) {
    return std::isinf(e);
  }));
}

// Runs fn(i) for i in [0, count) on `workers` threads; the first exception
// (lowest index) is rethrown.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

class SweepAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One temporal test per (grid point, replicate); every calibrator is applied
// to the same snapshot p-values. Replicates whose generator or static test
// rejects its input are dropped from the medians unless more than 10% of a
// grid point fails, which aborts the sweep.
inline SweepResult run_sweep(const ExperimentConfig& cfg,
                             const std::function<void(std::size_t, std::size_t)>& progress = {}) {
  cfg.validate();
  const std::size_t G = cfg.grid.size(), R = cfg.mc_reps, C = cfg.calibrators.size();
  struct Outcome {
    bool ok = false;
    std::vector<double> combined;
    std::string error;
  };
  std::vector<Outcome> outcomes(G * R);
  StaticTestOptions opts;
  opts.kind = cfg.static_test;
  opts.n_boot = cfg.n_boot;

  std::mutex progress_mutex;
  std::size_t done = 0;
  parallel_for(G * R, cfg.threads, [&](std::size_t unit) {
    const std::size_t g = unit / R, r = unit % R;
    const double x = cfg.grid[g];
    const std::size_t n = cfg.vary == "n" ? static_cast<std::size_t>(std::llround(x)) : cfg.n;
    const double delta = cfg.vary == "delta" ? x : cfg.delta;
    Outcome& out = outcomes[unit];
    try {
      const auto net = generate_network(cfg, n, delta, derive_seed(cfg.seed, {stream::generate, g, r}));
      const auto pv = snapshot_pvalues(net, derive_seed(cfg.seed, {stream::static_test, g, r}), opts);
      for (const auto& cal : cfg.calibrators) out.combined.push_back(make_report(pv.pvalues, cal, cfg.threshold).combined);
      out.ok = true;
    } catch (const InvalidInput& e) {
      out.error = e.what();
    }
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(++done, G * R);
    }
  });

  SweepResult res;
  for (const auto& cal : cfg.calibrators) res.calibrators.push_back(cal.name());
  res.cells.assign(G, std::vector<SweepCell>(C));
  res.failures.assign(G, 0);
  for (std::size_t g = 0; g < G; ++g) {
    res.settings.push_back(detail::grid_label(cfg.vary, cfg.grid[g]));
    for (std::size_t r = 0; r < R; ++r) {
      const Outcome& o = outcomes[g * R + r];
      if (!o.ok) {
        ++res.failures[g];
        continue;
      }
      for (std::size_t c = 0; c < C; ++c) {
        res.cells[g][c].replicate.push_back(r);
        res.cells[g][c].evalue.push_back(o.combined[c]);
      }
    }
    if (10 * res.failures[g] > R) {
      std::string first;
      for (std::size_t r = 0; r < R && first.empty(); ++r) first = outcomes[g * R + r].error;
      throw SweepAborted("setting " + res.settings[g] + ": " + std::to_string(res.failures[g]) + " of " +
                         std::to_string(R) + " replicates failed (first: " + first + ")");
    }
    for (auto& cell : res.cells[g]) finalize_cell(cell);
  }
  return res;
}

// Writes <dir>/evalues.csv (setting,calibrator,replicate,evalue; replicate
// numbers start at 1) and <dir>/medians.csv (setting,calibrator,median,is_infinite).
inline void emit_csv(const SweepResult& res, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto base = std::filesystem::path(dir);
  std::ofstream ev(base / "evalues.csv"), med(base / "medians.csv");
  if (!ev || !med) throw DataError("cannot write CSV files in " + dir);
  ev << "setting,calibrator,replicate,evalue\n";
  med << "setting,calibrator,median,is_infinite\n";
  for (std::size_t s = 0; s < res.cells.size(); ++s)
    for (std::size_t c = 0; c < res.cells[s].size(); ++c) {
      const auto& cell = res.cells[s][c];
      for (std::size_t i = 0; i < cell.evalue.size(); ++i)
        ev << res.settings[s] << ',' << res.calibrators[c] << ',' << cell.replicate[i] + 1 << ','
           << detail::format_number(cell.evalue[i]) << '\n';
      med << res.settings[s] << ',' << res.calibrators[c] << ',' << detail::format_number(cell.median) << ','
          << (std::isinf(cell.median) ? "true" : "false") << '\n';
    }
  ev.flush();
  med.flush();
  if (!ev || !med) throw DataError("error writing CSV files in " + dir);
}

// Rebuilds a SweepResult from evalues.csv; medians are recomputed.
inline SweepResult read_sweep_csv(const std::string& dir) {
  const auto path = std::filesystem::path(dir) / "evalues.csv";
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  SweepResult res;
  std::map<std::string, std::size_t> s_index, c_index;
  std::string line;
  std::getline(in, line);
  if (detail::trim(line) != "setting,calibrator,replicate,evalue") throw DataError(path.string() + ": bad header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto f = detail::split(line, ',');
    if (f.size() != 4) throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected 4 fields");
    auto [si, s_new] = s_index.try_emplace(f[0], res.settings.size());
    if (s_new) {
      res.settings.push_back(f[0]);
      res.failures.push_back(0);
      res.cells.emplace_back(res.calibrators.size());
    }
    auto [ci, c_new] = c_index.try_emplace(f[1], res.calibrators.size());
    if (c_new) {
      res.calibrators.push_back(f[1]);
      for (auto& row : res.cells) row.resize(res.calibrators.size());
    }
    auto& cell = res.cells[si->second][ci->second];
    cell.replicate.push_back(detail::to_size("replicate", f[2]) - 1);
    cell.evalue.push_back(detail::parse_number(f[3]));
  }
  for (auto& row : res.cells)
    for (auto& cell : row) finalize_cell(cell);
  return res;
}

inline std::string describe(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "name = " << cfg.name << "\nmodel = " << to_string(cfg.model) << "\nn = " << cfg.n << "\nt = " << cfg.T
     << "\nk = " << cfg.K << "\nb = " << detail::format_number(cfg.b)
     << "\ndelta = " << detail::format_number(cfg.delta) << "\nrho = " << detail::format_number(cfg.rho)
     << "\ngroup1_fraction = " << detail::format_number(cfg.group1_fraction) << "\npi = ";
  for (std::size_t i = 0; i < cfg.pi.size(); ++i) os << (i ? "," : "") << detail::format_number(cfg.pi[i]);
  os << "\nalpha = ";
  for (std::size_t i = 0; i < cfg.alpha.size(); ++i) os << (i ? "," : "") << detail::format_number(cfg.alpha[i]);
  os << "\nepsilon = " << detail::format_number(cfg.epsilon) << "\nmc_reps = " << cfg.mc_reps << "\ncalibrators = ";
  for (std::size_t i = 0; i < cfg.calibrators.size(); ++i) os << (i ? "," : "") << cfg.calibrators[i].name();
  os << "\nstatic_test = " << to_string(cfg.static_test) << "\nn_boot = " << cfg.n_boot
     << "\nthreshold = " << detail::format_number(cfg.threshold) << "\nseed = " << cfg.seed << "\nvary = " << cfg.vary
     << "\ngrid = ";
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) os << (i ? "," : "") << detail::format_number(cfg.grid[i]);
  os << '\n';
  return os.str();
}

struct RealDataOptions {
  std::size_t bins = 5;
  StaticTestOptions test{StaticTest::e2d2};
  Calibrator calibrator = Calibrator::kappa(0.25);
  double threshold = 20.0;
  std::uint64_t seed = 1;
  bool relabel = false;
  std::size_t nodes = 0;  // 0: inferred from the file
  bool assume_independent = false;
};

struct RealDataResult {
  TemporalTestResult test;
  BinnedNetwork binned;
  EventList events;
};

// Ingest a timestamped edge list, bin it and run the temporal test.
inline RealDataResult run_real(const std::string& path, const RealDataOptions& opts) {
  RealDataResult out;
  out.events = read_events(path, opts.relabel);
  std::size_t n = out.events.num_nodes;
  if (opts.nodes) {
    if (opts.nodes < n) throw DataError(path + ": node id exceeds --nodes");
    n = opts.nodes;
  }
  try {
    out.binned = bin_events(out.events.events, opts.bins, n);
  } catch (const InvalidInput& e) {
    throw DataError(path + ": " + e.what());
  }
  out.test = run_temporal_test(out.binned.network, opts.test, opts.calibrator, opts.threshold, opts.seed,
                               opts.assume_independent);
  return out;
}

}  // namespace tempcom
