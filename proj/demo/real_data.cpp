// Run the e2d2-based temporal test on a timestamped edge list:
//   demo_real_data events.txt [T]

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "tempcom/tempcom.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s EVENTS [T]\n", argv[0]);
    return 1;
  }
  tempcom::RealDataOptions opts;
  opts.bins = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 5;
  opts.test.n_boot = 200;
  try {
    const auto res = tempcom::run_real(argv[1], opts);
    const auto& r = res.test.report;
    for (std::size_t t = 0; t < r.pvalues.size(); ++t)
      std::printf("window [%g, %g]  edges %zu  p = %.3f  e = %.3f  without it: %.3f\n", res.binned.windows[t].first,
                  res.binned.windows[t].second, res.binned.network[t].num_edges(), r.pvalues[t], r.evalues[t],
                  r.loo[t]);
    std::printf("combined e-value %.3f\n", r.combined);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
