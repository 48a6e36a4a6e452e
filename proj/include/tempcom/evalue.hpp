#pragma once

// p-to-e calibration, arithmetic-mean combination of e-values, and the
// combined test report.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tempcom/error.hpp"

namespace tempcom {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class PValue {
 public:
  explicit PValue(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("p-value must lie in [0, 1]");
  }
  double value() const { return v_; }

 private:
  double v_;
};

class EValue {
 public:
  explicit EValue(double v) : v_(v) {
    if (!(v >= 0.0)) throw InvalidInput("e-value must be non-negative");
  }
  double value() const { return v_; }
  bool is_infinite() const { return std::isinf(v_); }

 private:
  double v_;
};

class Calibrator {
 public:
  enum class Kind { kappa, max, avg };

  static Calibrator kappa(double k) {
    if (!(k > 0.0 && k < 1.0)) throw InvalidInput("kappa must lie in (0, 1)");
    return Calibrator(Kind::kappa, k);
  }
  static Calibrator max() { return Calibrator(Kind::max, 0.0); }
  static Calibrator avg() { return Calibrator(Kind::avg, 0.0); }

  // "max", "avg" or "kappa:<value>".
  static Calibrator parse(const std::string& spec) {
    if (spec == "max") return max();
    if (spec == "avg") return avg();
    if (spec.rfind("kappa:", 0) == 0) {
      const std::string num = spec.substr(6);
      std::size_t used = 0;
      double k = 0.0;
      try {
        k = std::stod(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != num.size()) throw InvalidInput("bad kappa value in calibrator '" + spec + "'");
      return kappa(k);
    }
    throw InvalidInput("unknown calibrator '" + spec + "' (expected max, avg or kappa:<x>)");
  }

  Kind kind() const { return kind_; }
  double kappa_value() const { return kappa_; }

  // The max transform is pointwise optimal over kappa and not a calibrator.
  bool is_proper() const { return kind_ != Kind::max; }

  std::string name() const {
    switch (kind_) {
      case Kind::max: return "max";
      case Kind::avg: return "avg";
      case Kind::kappa: {
        std::ostringstream os;
        os << "kappa:" << kappa_;
        return os.str();
      }
    }
    return {};
  }

  // g(p); +inf at p = 0 and 0 for p > 1.
  double operator()(double p) const {
    if (std::isnan(p) || p < 0.0) throw InvalidInput("calibrator argument must be non-negative");
    if (p > 1.0) return 0.0;
    if (p == 0.0) return kInf;
    switch (kind_) {
      case Kind::kappa: return kappa_ * std::pow(p, kappa_ - 1.0);
      case Kind::max: {
        constexpr double knot = 0.36787944117144233;  // exp(-1)
        return p <= knot ? -knot / (p * std::log(p)) : 1.0;
      }
      case Kind::avg: return avg_calibrator(p);
    }
    return 0.0;
  }

  friend bool operator==(const Calibrator&, const Calibrator&) = default;

 private:
  Calibrator(Kind k, double kappa) : kind_(k), kappa_(kappa) {}

  // (1 - p + p log p) / (p log^2 p). With e = 1 - p the numerator is
  // sum_{j>=2} e^j / (j (j - 1)), summed directly near p = 1 where the closed
  // form cancels; the limit at p = 1 is 1/2.
  static double avg_calibrator(double p) {
    if (p == 1.0) return 0.5;
    const double e = 1.0 - p;
    // e is exact for p >= 1/2; below that 1 - p can round to 1
    const double l = p >= 0.5 ? std::log1p(-e) : std::log(p);
    double num = 0.0;
    if (e < 0.05) {
      double pow_e = e * e;
      for (int j = 2; j < 40; ++j) {
        num += pow_e / (j * (j - 1.0));
        pow_e *= e;
      }
    } else {
      num = 1.0 - p + p * l;
    }
    return num / (p * l * l);
  }

  Kind kind_;
  double kappa_;
};

inline EValue calibrate(PValue p, const Calibrator& cal) { return EValue(cal(p.value())); }

// Arithmetic mean; +inf absorbs.
inline EValue combine_mean(const std::vector<EValue>& es) {
  if (es.empty()) throw InvalidInput("cannot combine an empty list of e-values");
  double sum = 0.0;
  for (const auto& e : es) {
    if (e.is_infinite()) return EValue(kInf);
    sum += e.value();
  }
  return EValue(sum / static_cast<double>(es.size()));
}

// Product of e-values; only an e-value when the inputs are independent.
inline EValue combine_product(const std::vector<EValue>& es) {
  if (es.empty()) throw InvalidInput("cannot combine an empty list of e-values");
  bool zero = false, inf = false;
  double log_sum = 0.0;
  for (const auto& e : es) {
    if (e.value() == 0.0) zero = true;
    else if (e.is_infinite()) inf = true;
    else log_sum += std::log(e.value());
  }
  if (zero && inf) throw InvalidInput("product of e-values is 0 * inf");
  if (zero) return EValue(0.0);
  if (inf) return EValue(kInf);
  return EValue(std::exp(log_sum));
}

// Markov: 1/E is a p-value (capped at 1).
inline PValue evalue_to_pvalue(EValue e) {
  if (e.is_infinite()) return PValue(0.0);
  if (e.value() <= 1.0) return PValue(1.0);
  return PValue(1.0 / e.value());
}

// Mean of all e-values except index t, for every t. NaN when T = 1.
inline std::vector<double> leave_one_out_means(const std::vector<double>& es) {
  const std::size_t T = es.size();
  std::vector<double> out(T, std::numeric_limits<double>::quiet_NaN());
  if (T < 2) return out;
  std::size_t infinite = 0;
  double finite_sum = 0.0;
  for (double e : es) {
    if (std::isinf(e)) ++infinite;
    else finite_sum += e;
  }
  for (std::size_t t = 0; t < T; ++t) {
    const std::size_t inf_rest = infinite - (std::isinf(es[t]) ? 1 : 0);
    out[t] = inf_rest ? kInf : (finite_sum - (std::isinf(es[t]) ? 0.0 : es[t])) / static_cast<double>(T - 1);
  }
  return out;
}

struct TestReport {
  std::string static_test;
  std::string calibrator;
  std::vector<double> pvalues;
  std::vector<double> evalues;
  double combined = 0.0;
  std::vector<double> loo;
  double threshold = 20.0;
  bool reject = false;
  std::optional<double> product;  // set only when independence is asserted
};

inline TestReport make_report(const std::vector<double>& pvalues, const Calibrator& cal, double threshold,
                              bool assume_independent = false) {
  if (pvalues.empty()) throw InvalidInput("no snapshot p-values");
  TestReport r;
  r.calibrator = cal.name();
  r.threshold = threshold;
  r.pvalues = pvalues;
  std::vector<EValue> es;
  for (double p : pvalues) {
    es.push_back(calibrate(PValue(p), cal));
    r.evalues.push_back(es.back().value());
  }
  r.combined = combine_mean(es).value();
  r.loo = leave_one_out_means(r.evalues);
  r.reject = r.combined > threshold;
  if (assume_independent) r.product = combine_product(es).value();
  return r;
}

// JSON numbers with infinities written as "inf" and NaN as null.
inline nlohmann::json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double number_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw DataError("unexpected string in numeric field: " + s);
  }
  return j.get<double>();
}

inline nlohmann::json to_json(const TestReport& r) {
  auto arr = [](const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(json_number(x));
    return a;
  };
  nlohmann::json j;
  j["static_test"] = r.static_test;
  j["pvalues"] = arr(r.pvalues);
  j["evalues"] = arr(r.evalues);
  j["combined"] = json_number(r.combined);
  j["loo"] = arr(r.loo);
  j["calibrator"] = r.calibrator;
  j["threshold"] = json_number(r.threshold);
  j["reject"] = r.reject;
  if (r.product) j["product"] = json_number(*r.product);
  return j;
}

inline TestReport report_from_json(const nlohmann::json& j) {
  auto arr = [](const nlohmann::json& a) {
    std::vector<double> v;
    for (const auto& x : a) v.push_back(number_from_json(x));
    return v;
  };
  try {
    TestReport r;
    r.static_test = j.value("static_test", "");
    r.pvalues = arr(j.at("pvalues"));
    r.evalues = arr(j.at("evalues"));
    r.combined = number_from_json(j.at("combined"));
    r.loo = arr(j.at("loo"));
    r.calibrator = j.at("calibrator").get<std::string>();
    r.threshold = number_from_json(j.at("threshold"));
    r.reject = j.at("reject").get<bool>();
    if (j.contains("product")) r.product = number_from_json(j.at("product"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed test report: ") + e.what());
  }
}

}  // namespace tempcom
