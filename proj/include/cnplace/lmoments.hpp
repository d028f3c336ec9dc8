#pragma once

#include <cstddef>
#include <span>

namespace cnplace {

struct LMoments {
  double l1 = 0.0;  // location
  double l2 = 0.0;  // scale, >= 0
  double t3 = 0.0;  // L-skewness l3/l2
  double t4 = 0.0;  // L-kurtosis l4/l2
  std::size_t n = 0;
  bool ratios_defined = false;  // false when l2 == 0 (constant sample)
};

/// Unbiased sample L-moments from probability-weighted moments of the
/// sorted sample:
///   b_r = n^-1 sum_j x_(j) C(j-1,r)/C(n-1,r)
///   l1 = b0, l2 = 2 b1 - b0, l3 = 6 b2 - 6 b1 + b0,
///   l4 = 20 b3 - 30 b2 + 12 b1 - b0.
/// Needs at least 4 values. A constant sample yields l2 = 0 and undefined
/// ratios (flagged, not thrown).
LMoments sample_lmoments(std::span<const double> xs);

}  // namespace cnplace
