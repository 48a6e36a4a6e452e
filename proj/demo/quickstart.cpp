// Sample a correlated SBM with and without planted communities and run the
// temporal test on both.

#include <cstdio>

#include "tempcom/tempcom.hpp"

int main() {
  using namespace tempcom;
  const std::size_t n = 400, T = 10;
  const auto labels = CommunityLabels::two_groups(n, 0.8);
  StaticTestOptions opts;  // tw with 50 bootstrap replicates
  for (double delta : {0.0, 0.016}) {
    const auto net = sample_correlated_sbm(labels, BlockMatrix::planted(2, 0.01, delta), 0.25, T, 42);
    const auto res = run_temporal_test(net, opts, Calibrator::kappa(0.25), 20.0, 7);
    std::printf("delta = %.3f\n", delta);
    for (std::size_t t = 0; t < T; ++t)
      std::printf("  snapshot %2zu  p = %.4f  e = %.3f\n", t + 1, res.report.pvalues[t], res.report.evalues[t]);
    std::printf("  combined e-value %.3f -> %s\n\n", res.report.combined,
                res.report.reject ? "community structure" : "no evidence");
  }
}
