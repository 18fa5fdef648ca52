#ifndef DCDLAB_FIT_HPP
#define DCDLAB_FIT_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "dcdlab/errors.hpp"

namespace dcdlab {

struct FitResult {
  double slope = 0.0;
  double residual = 0.0;  // RMS residual of log(value) around the fit line
};

/// Least-squares slope of log(value) against log(k). The one place the
/// library leaves exact arithmetic; confined to reporting.
inline FitResult fit_exponent(const std::vector<std::pair<double, double>>& records) {
  if (records.size() < 3) throw TooSmall("exponent fit needs at least 3 records");
  const double n = static_cast<double>(records.size());
  double sx = 0, sy = 0;
  std::vector<std::pair<double, double>> logs;
  logs.reserve(records.size());
  for (const auto& [k, v] : records) {
    if (k <= 0 || v <= 0) throw UsageError("exponent fit needs positive inputs");
    logs.emplace_back(std::log(k), std::log(v));
    sx += logs.back().first;
    sy += logs.back().second;
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw Degenerate("exponent fit: all k equal");
  FitResult out;
  out.slope = sxy / sxx;
  const double intercept = my - out.slope * mx;
  double ss = 0;
  for (const auto& [x, y] : logs) {
    double e = y - (intercept + out.slope * x);
    ss += e * e;
  }
  out.residual = std::sqrt(ss / n);
  return out;
}

inline FitResult fit_exponent_int(const std::vector<std::pair<std::int64_t, std::int64_t>>& records) {
  std::vector<std::pair<double, double>> kv;
  kv.reserve(records.size());
  for (const auto& [k, v] : records)
    kv.emplace_back(static_cast<double>(k), static_cast<double>(v));
  return fit_exponent(kv);
}

}  // namespace dcdlab

#endif  // DCDLAB_FIT_HPP
