#pragma once

#include <cstdint>
#include <vector>

#include "cnplace/lmoments.hpp"

namespace cnplace {

/// Generalized extreme value parameters. The shape k follows the
/// L-moment-literature convention used throughout this project: the
/// quantile function is x(F) = mu + sigma (1 - (-ln F)^k) / k, and
/// k = -xi of the other common convention. k = 0 is the Gumbel case.
struct GevParams {
  double mu = 0.0;     // location
  double sigma = 1.0;  // scale, > 0
  double k = 0.0;      // shape
  void validate() const;
};

/// Four-parameter Kappa. Quantile x(F) = xi + (alpha/k)(1 - ((1-F^h)/h)^k);
/// h = 0 reduces to GEV, h = 1 to the generalized Pareto family
/// (k = h = 1 is Uniform(xi, xi+alpha)).
struct Kappa4Params {
  double xi = 0.0;     // location
  double alpha = 1.0;  // scale, > 0
  double k = 0.0;      // shape
  double h = 0.0;      // shape
  void validate() const;  // alpha > 0, k > -1, and h*k > -1 when h < 0
};

/// GEV fit from sample L-moments (method-of-L-moments estimator):
///   c = 2/(3+t3) - ln2/ln3,  k = 7.8590 c + 2.9554 c^2,
///   sigma = l2 k / ((1 - 2^-k) Gamma(1+k)),
///   mu = l1 - sigma (1 - Gamma(1+k))/k,
/// with the Gumbel limit sigma = l2/ln2, mu = l1 - gamma_E sigma for
/// |k| < 1e-8.
GevParams fit_gev(const LMoments& lm);

struct Kappa4Fit {
  Kappa4Params params;
  bool gev_fallback = false;  // Newton failed; params are the GEV fit (h=0)
};

/// Kappa fit: Newton-Raphson on (k,h) matching the population (tau3,tau4)
/// to the sample values (residual tolerance 1e-8, at most 50 iterations,
/// initial guess h=0 with k from the GEV estimator), then alpha and xi
/// from l1, l2. (t3,t4) outside the attainable region is a NumericError;
/// a failed iteration falls back to the GEV fit with a flag.
Kappa4Fit fit_kappa4(const LMoments& lm);

double gev_quantile(const GevParams& p, double u);
double gev_cdf(const GevParams& p, double x);
double kappa4_quantile(const Kappa4Params& p, double u);
double kappa4_cdf(const Kappa4Params& p, double x);

/// Inverse-CDF sampling from a seeded deterministic stream; both samplers
/// consume exactly one uniform draw per value, so equal seeds yield equal
/// underlying uniform streams across the two families.
std::vector<double> sample_gev(const GevParams& p, std::size_t n,
                               std::uint64_t seed);
std::vector<double> sample_kappa4(const Kappa4Params& p, std::size_t n,
                                  std::uint64_t seed);

/// Population L-moments (exact, for diagnostics and tests).
LMoments population_lmoments(const GevParams& p);
LMoments population_lmoments(const Kappa4Params& p);

/// Normal baseline for goodness-of-fit comparisons: mu = l1,
/// sigma = l2 * sqrt(pi).
struct NormalParams {
  double mu = 0.0;
  double sigma = 1.0;
};
NormalParams fit_normal(const LMoments& lm);
double normal_cdf(const NormalParams& p, double x);

}  // namespace cnplace
