#include "cnplace/lmoments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cnplace/errors.hpp"

namespace cnplace {

LMoments sample_lmoments(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 4) {
    throw NumericError("need at least 4 samples for L-moments, got " +
                       std::to_string(n));
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());

  // b_r = n^-1 sum_{j=r+1..n} x_(j) * prod_{i=1..r} (j-i)/(n-i)
  double b[4] = {0.0, 0.0, 0.0, 0.0};
  const double dn = static_cast<double>(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double x = sorted[j - 1];
    double wr = 1.0;
    b[0] += x;
    for (int r = 1; r <= 3; ++r) {
      wr *= (static_cast<double>(j) - r) / (dn - r);
      b[r] += wr * x;
    }
  }
  for (double& v : b) v /= dn;

  LMoments lm;
  lm.n = n;
  lm.l1 = b[0];
  lm.l2 = 2.0 * b[1] - b[0];
  const double l3 = 6.0 * b[2] - 6.0 * b[1] + b[0];
  const double l4 = 20.0 * b[3] - 30.0 * b[2] + 12.0 * b[1] - b[0];
  if (lm.l2 > 0.0) {
    lm.t3 = l3 / lm.l2;
    lm.t4 = l4 / lm.l2;
    lm.ratios_defined = true;
  } else {
    lm.l2 = std::max(lm.l2, 0.0);  // guard tiny negative rounding
    lm.t3 = std::numeric_limits<double>::quiet_NaN();
    lm.t4 = std::numeric_limits<double>::quiet_NaN();
    lm.ratios_defined = false;
  }
  return lm;
}

}  // namespace cnplace
