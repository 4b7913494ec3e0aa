#include "inclusion/rate_fit.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "inclusion/errors.hpp"

namespace inclusion {

double fit_rate_exponent(std::span<const IterateRecord> records, long k_min) {
  std::vector<double> xs, ys;
  bool degenerate = false;
  for (const auto& rec : records) {
    if (rec.k < k_min) continue;
    if (rec.cert_residual == 0.0) {
      degenerate = true;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(rec.k)));
    ys.push_back(std::log(rec.cert_residual));
  }
  if (degenerate) return -std::numeric_limits<double>::infinity();
  if (xs.size() < 10)
    throw InsufficientData("fit_rate_exponent: need at least 10 records with k >= " +
                           std::to_string(k_min) + ", have " +
                           std::to_string(xs.size()));

  const auto n = static_cast<double>(xs.size());
  double xm = 0.0, ym = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    xm += xs[i];
    ym += ys[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - xm;
    sxx += dx * dx;
    sxy += dx * (ys[i] - ym);
  }
  if (sxx == 0.0)
    throw InsufficientData("fit_rate_exponent: all qualifying records share one k");
  return sxy / sxx;
}

}  // namespace inclusion
