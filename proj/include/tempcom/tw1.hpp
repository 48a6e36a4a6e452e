#pragma once

// Tracy-Widom (beta = 1) reference distribution: a tabulated CDF with
// monotone cubic (Fritsch-Carlson) interpolation, plus its first two moments.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tempcom/error.hpp"
#include "tempcom/tw1_table.hpp"

namespace tempcom {

// Literature values; the bundled table reproduces both to better than 1e-6.
inline constexpr double kTw1Mean = -1.2065335745820;
inline constexpr double kTw1Sd = 1.2679830576869;  // sqrt(1.607781034581)

class Tw1Reference {
 public:
  Tw1Reference(std::vector<double> x, std::vector<double> cdf, double mean, double sd)
      : x_(std::move(x)), f_(std::move(cdf)), mean_(mean), sd_(sd) {
    if (x_.size() < 2 || x_.size() != f_.size()) throw DataError("TW1 table needs at least two (x, F) rows");
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (!(f_[i] >= 0.0 && f_[i] <= 1.0)) throw DataError("TW1 table CDF value outside [0, 1]");
      if (i && !(x_[i] > x_[i - 1] && f_[i] > f_[i - 1])) throw DataError("TW1 table must be strictly increasing");
    }
    if (!(sd_ > 0.0)) throw DataError("TW1 standard deviation must be positive");
    build_slopes();
  }

  static const Tw1Reference& builtin() {
    static const Tw1Reference ref = [] {
      std::vector<double> x(detail::kTw1GridSize);
      for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = detail::kTw1GridMin + detail::kTw1GridStep * static_cast<double>(i);
      return Tw1Reference(std::move(x), {detail::kTw1Cdf.begin(), detail::kTw1Cdf.end()}, kTw1Mean, kTw1Sd);
    }();
    return ref;
  }

  // Text table: `x F(x)` rows; `#` lines are comments. A `# mean <m> sd <s>`
  // comment overrides the literature moments.
  static Tw1Reference load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open TW1 table " + path);
    std::vector<double> x, f;
    double mean = kTw1Mean, sd = kTw1Sd;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::istringstream c(line.substr(1));
        std::string key1, key2;
        double m = 0.0, s = 0.0;
        if (c >> key1 >> m >> key2 >> s && key1 == "mean" && key2 == "sd") {
          mean = m;
          sd = s;
        }
        continue;
      }
      std::istringstream row(line);
      double a = 0.0, b = 0.0;
      if (!(row >> a >> b)) throw DataError(path + ":" + std::to_string(lineno) + ": expected 'x F(x)'");
      x.push_back(a);
      f.push_back(b);
    }
    return Tw1Reference(std::move(x), std::move(f), mean, sd);
  }

  double mean() const { return mean_; }
  double sd() const { return sd_; }
  const std::vector<double>& grid() const { return x_; }
  const std::vector<double>& cdf_values() const { return f_; }

  // Interpolated CDF; clamps to the end values outside the grid.
  double cdf(double x) const {
    if (std::isnan(x)) return x;
    if (x <= x_.front()) return f_.front();
    if (x >= x_.back()) return f_.back();
    const auto i = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * f_[i] + (t3 - 2 * t2 + t) * h * d_[i] + (-2 * t3 + 3 * t2) * f_[i + 1] +
                     (t3 - t2) * h * d_[i + 1];
    return std::clamp(v, f_[i], f_[i + 1]);
  }

  double survival(double x) const { return x < x_.front() ? 1.0 : 1.0 - cdf(x); }

 private:
  void build_slopes() {
    const std::size_t n = x_.size();
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (f_[i + 1] - f_[i]) / (x_[i + 1] - x_[i]);
    d_.assign(n, 0.0);
    d_[0] = delta[0];
    d_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      // weighted harmonic mean keeps the interpolant monotone
      const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
      const double w1 = 2 * h1 + h0, w2 = h1 + 2 * h0;
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }

  std::vector<double> x_, f_, d_;
  double mean_, sd_;
};

// P(X > x) for X ~ TW1. Below the grid: 1. Above: the last tabulated tail value.
inline double tw1_survival(double x, const Tw1Reference& ref = Tw1Reference::builtin()) { return ref.survival(x); }

}  // namespace tempcom
