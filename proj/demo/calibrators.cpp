// Table of e-values produced by each calibrator for a few p-values.

#include <cstdio>
#include <vector>

#include "tempcom/evalue.hpp"

int main() {
  using tempcom::Calibrator;
  const std::vector<Calibrator> cals{Calibrator::max(), Calibrator::avg(), Calibrator::kappa(0.25),
                                     Calibrator::kappa(0.5), Calibrator::kappa(0.75)};
  std::printf("%10s", "p");
  for (const auto& c : cals) std::printf(" %12s", c.name().c_str());
  std::printf("\n");
  for (double p : {0.0, 1e-6, 1e-4, 0.001, 0.01, 0.05, 0.1, 0.25, 0.5, 1.0}) {
    std::printf("%10g", p);
    for (const auto& c : cals) std::printf(" %12.5g", c(p));
    std::printf("\n");
  }
}
