#pragma once

// Spectral test of "no community structure" against an Erdos-Renyi null.
//
// The observed graph is centred by its fitted ER mean P = p (11' - I) and
// scaled by sqrt((n - 1) p (1 - p)); the statistic is the top eigenvalue of
// that matrix. Because the Tracy-Widom limit is approached slowly, the
// statistic is re-standardised with the mean and sd of the same quantity on
// ER(n, p) replicates (same p, same scaling) before the TW1 tail is read off.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "tempcom/error.hpp"
#include "tempcom/generators.hpp"
#include "tempcom/graph.hpp"
#include "tempcom/lanczos.hpp"
#include "tempcom/rng.hpp"
#include "tempcom/tw1.hpp"

namespace tempcom {

enum class EigenSide {
  algebraic,  // largest algebraic eigenvalue
  magnitude,  // eigenvalue of largest |value|, sign kept
};

namespace detail {

inline double top_centered_eigenvalue(const Snapshot& s, double p_hat, EigenSide side,
                                      const LanczosOptions& opts) {
  const std::size_t n = s.num_nodes();
  // M x = A x - p (sum(x) 1 - x)
  auto apply = [&](double sign) {
    return [&s, p_hat, sign](std::span<const double> x, std::span<double> y) {
      s.multiply(x, y);
      const double total = std::accumulate(x.begin(), x.end(), 0.0);
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign * (y[i] - p_hat * (total - x[i]));
    };
  };
  const double top = largest_eigenpair(n, apply(1.0), false, opts).value;
  if (side == EigenSide::algebraic) return top;
  const double bottom = -largest_eigenpair(n, apply(-1.0), false, opts).value;
  return std::abs(bottom) > std::abs(top) ? bottom : top;
}

}  // namespace detail

// Top eigenvalue of (A - P) / sqrt((n - 1) p (1 - p)).
inline double standardized_top_eigenvalue(const Snapshot& s, EigenSide side = EigenSide::algebraic,
                                          const LanczosOptions& opts = {}) {
  const double p = edge_density(s);
  if (p <= 0.0 || p >= 1.0) throw DegenerateInput("graph is empty or complete");
  const double n = static_cast<double>(s.num_nodes());
  return detail::top_centered_eigenvalue(s, p, side, opts) / std::sqrt((n - 1.0) * p * (1.0 - p));
}

struct TwTestOptions {
  std::size_t n_boot = 50;
  EigenSide side = EigenSide::algebraic;
  const Tw1Reference* reference = nullptr;  // null: bundled table
  LanczosOptions lanczos{};
};

struct TwTestResult {
  double p_value = 1.0;
  bool degenerate = false;  // empty or complete graph; p-value fixed at 1
  std::size_t n = 0;
  double p_hat = 0.0;
  double statistic = 0.0;       // gamma
  double boot_mean = 0.0;
  double boot_sd = 0.0;
  double corrected = 0.0;       // gamma'
};

// Maps gamma to mu_TW + (gamma - mean) / sd * sigma_TW.
inline double bootstrap_corrected_statistic(double gamma, double boot_mean, double boot_sd,
                                            const Tw1Reference& ref) {
  return ref.mean() + (gamma - boot_mean) / boot_sd * ref.sd();
}

// Bootstrap-corrected TW1 p-value. Replicate b draws from
// Rng(derive_seed(seed, {bootstrap, b})).
inline TwTestResult tw_pvalue_bootstrap(const Snapshot& s, std::uint64_t seed, const TwTestOptions& opts = {}) {
  const Tw1Reference& ref = opts.reference ? *opts.reference : Tw1Reference::builtin();
  if (s.num_nodes() < 10) throw InvalidInput("spectral test needs at least 10 nodes");
  if (opts.n_boot < 2) throw InvalidInput("spectral test needs at least 2 bootstrap replicates");
  TwTestResult r;
  r.n = s.num_nodes();
  r.p_hat = edge_density(s);
  if (r.p_hat <= 0.0 || r.p_hat >= 1.0) {
    r.degenerate = true;
    r.p_value = 1.0;
    return r;
  }
  const double n = static_cast<double>(r.n);
  const double scale = std::sqrt((n - 1.0) * r.p_hat * (1.0 - r.p_hat));
  r.statistic = detail::top_centered_eigenvalue(s, r.p_hat, opts.side, opts.lanczos) / scale;

  std::vector<double> boot(opts.n_boot);
  for (std::size_t b = 0; b < opts.n_boot; ++b) {
    Rng rng(derive_seed(seed, {stream::bootstrap, b}));
    const Snapshot replicate = sample_er(r.n, r.p_hat, rng);
    boot[b] = detail::top_centered_eigenvalue(replicate, r.p_hat, opts.side, opts.lanczos) / scale;
  }
  const double k = static_cast<double>(boot.size());
  r.boot_mean = std::accumulate(boot.begin(), boot.end(), 0.0) / k;
  double ss = 0.0;
  for (double g : boot) ss += (g - r.boot_mean) * (g - r.boot_mean);
  r.boot_sd = std::sqrt(ss / (k - 1.0));
  if (!(r.boot_sd > 0.0)) throw InvalidInput("bootstrap statistics have zero spread");
  r.corrected = bootstrap_corrected_statistic(r.statistic, r.boot_mean, r.boot_sd, ref);
  r.p_value = ref.survival(r.corrected);
  return r;
}

}  // namespace tempcom
