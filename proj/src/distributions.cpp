#include "cnplace/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cnplace/errors.hpp"
#include "cnplace/rng.hpp"

namespace cnplace {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kShapeEps = 1e-8;   // |k| below this -> Gumbel-limit branch
constexpr double kKappaHEps = 1e-4;  // |h| below this -> small-h expansion

double ln2() { return std::log(2.0); }

/// digamma for x > 0: recurrence up to x >= 6, then the asymptotic series.
double digamma(double x) {
  double r = 0.0;
  while (x < 6.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  const double f = 1.0 / (x * x);
  return r + std::log(x) - 0.5 / x -
         f * (1.0 / 12.0 -
              f * (1.0 / 120.0 - f * (1.0 / 252.0 - f * (1.0 / 240.0 - f / 132.0))));
}

bool kappa_feasible(double k, double h) {
  if (!(k > -1.0 + 1e-9)) return false;
  if (h < 0.0 && !(h * k > -1.0 + 1e-9)) return false;
  return true;
}

/// q_r = (1 - g_r)/k where g_r is the Kappa "gamma function" term of the
/// r-th probability weighted moment (the PWMs satisfy
/// (r+1) b_r = xi + (alpha/k)(1 - g_{r+1})). In terms of q_r:
///   l1 = xi + alpha q1          l2 = alpha (q2 - q1)
///   t3 = (q1 - 3 q2 + 2 q3) / (q2 - q1)
///   t4 = (-q1 + 6 q2 - 10 q3 + 5 q4) / (q2 - q1)
/// which stays finite through k -> 0. Branches:
///   h > 0:  g_r = r Gamma(1+k) Gamma(r/h) / (h^(1+k) Gamma(1+k+r/h))
///   h < 0:  g_r = r Gamma(1+k) Gamma(-k-r/h) / ((-h)^(1+k) Gamma(1-r/h))
///   h = 0:  g_r = Gamma(1+k) r^-k  (the GEV member)
/// For tiny |h| the exact branches subtract huge log-gammas, so a first-
/// order expansion in h is used instead:
///   ln g_r = lnGamma(1+k) - k ln r - log1p(k(1+k) h / (2r)).
double kappa_q(double k, double h, int r) {
  const double dr = r;
  double logg;  // ln g_r, finite and -> 0 as k -> 0
  if (std::abs(h) < kKappaHEps) {
    logg = std::lgamma(1.0 + k) - k * std::log(dr) -
           std::log1p(k * (1.0 + k) * h / (2.0 * dr));
    if (std::abs(k) < kShapeEps) {
      return kEulerGamma + std::log(dr) + h / (2.0 * dr);
    }
  } else if (h > 0.0) {
    logg = std::log(dr) + std::lgamma(1.0 + k) + std::lgamma(dr / h) -
           (1.0 + k) * std::log(h) - std::lgamma(1.0 + k + dr / h);
    if (std::abs(k) < kShapeEps) {
      return kEulerGamma + std::log(h) + digamma(1.0 + dr / h);
    }
  } else {
    logg = std::log(dr) + std::lgamma(1.0 + k) + std::lgamma(-k - dr / h) -
           (1.0 + k) * std::log(-h) - std::lgamma(1.0 - dr / h);
    if (std::abs(k) < kShapeEps) {
      return kEulerGamma + std::log(-h) + digamma(-dr / h);
    }
  }
  return -std::expm1(logg) / k;
}

struct KappaRatios {
  double t3, t4, q1, q2;
};

KappaRatios kappa_ratios(double k, double h) {
  const double q1 = kappa_q(k, h, 1);
  const double q2 = kappa_q(k, h, 2);
  const double q3 = kappa_q(k, h, 3);
  const double q4 = kappa_q(k, h, 4);
  const double d = q2 - q1;
  KappaRatios r;
  r.q1 = q1;
  r.q2 = q2;
  r.t3 = (q1 - 3.0 * q2 + 2.0 * q3) / d;
  r.t4 = (-q1 + 6.0 * q2 - 10.0 * q3 + 5.0 * q4) / d;
  return r;
}

double gev_shape_from_t3(double t3) {
  const double c = 2.0 / (3.0 + t3) - ln2() / std::log(3.0);
  return 7.8590 * c + 2.9554 * c * c;
}

}  // namespace

void GevParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(k)) {
    throw NumericError("invalid GEV parameters");
  }
}

void Kappa4Params::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(xi) || !std::isfinite(k) ||
      !std::isfinite(h)) {
    throw NumericError("invalid Kappa parameters");
  }
  if (!kappa_feasible(k, h)) {
    throw NumericError("Kappa parameters outside the L-moment feasibility region");
  }
}

GevParams fit_gev(const LMoments& lm) {
  if (!(lm.l2 > 0.0) || !lm.ratios_defined) {
    throw NumericError("degenerate L-moments: l2 must be positive");
  }
  if (!(std::abs(lm.t3) < 1.0)) {
    throw NumericError("L-skewness out of range for a GEV fit");
  }
  GevParams p;
  p.k = gev_shape_from_t3(lm.t3);
  if (std::abs(p.k) < kShapeEps) {
    p.k = 0.0;
    p.sigma = lm.l2 / ln2();
    p.mu = lm.l1 - kEulerGamma * p.sigma;
  } else {
    const double g = std::tgamma(1.0 + p.k);
    p.sigma = lm.l2 * p.k / (-std::expm1(-p.k * ln2()) * g);
    p.mu = lm.l1 - p.sigma * (1.0 - g) / p.k;
  }
  p.validate();
  return p;
}

Kappa4Fit fit_kappa4(const LMoments& lm) {
  if (!(lm.l2 > 0.0) || !lm.ratios_defined) {
    throw NumericError("degenerate L-moments: l2 must be positive");
  }
  const double t3 = lm.t3;
  const double t4 = lm.t4;
  if (!(std::abs(t3) < 1.0)) {
    throw NumericError("L-skewness out of range");
  }
  // Attainability: below the generalized-logistic line, above the overall
  // L-moment bound.
  if (t4 >= (1.0 + 5.0 * t3 * t3) / 6.0 - 1e-12) {
    throw NumericError("(t3,t4) above the Kappa-attainable region");
  }
  if (t4 <= (5.0 * t3 * t3 - 1.0) / 4.0 + 1e-12) {
    throw NumericError("(t3,t4) below the L-moment bound");
  }

  double k = gev_shape_from_t3(t3);
  double h = 0.0;
  if (!kappa_feasible(k, h)) k = -0.9;

  constexpr double kTol = 1e-8;
  constexpr int kMaxIter = 50;
  bool converged = false;

  auto residual_norm = [&](double rk, double rh, double* r3, double* r4) {
    const KappaRatios kr = kappa_ratios(rk, rh);
    *r3 = kr.t3 - t3;
    *r4 = kr.t4 - t4;
    return std::max(std::abs(*r3), std::abs(*r4));
  };

  double r3 = 0.0, r4 = 0.0;
  double norm = residual_norm(k, h, &r3, &r4);
  for (int iter = 0; iter < kMaxIter && !converged; ++iter) {
    if (norm < kTol) {
      converged = true;
      break;
    }
    // Numerical Jacobian, central differences.
    const double dk = 1e-6;
    const double dh = 1e-6;
    double a3, a4, b3, b4;
    const double kp = kappa_feasible(k + dk, h) ? k + dk : k;
    const double km = kappa_feasible(k - dk, h) ? k - dk : k;
    residual_norm(kp, h, &a3, &a4);
    residual_norm(km, h, &b3, &b4);
    const double j11 = (a3 - b3) / (kp - km);
    const double j21 = (a4 - b4) / (kp - km);
    const double hp = kappa_feasible(k, h + dh) ? h + dh : h;
    const double hm = kappa_feasible(k, h - dh) ? h - dh : h;
    residual_norm(k, hp, &a3, &a4);
    residual_norm(k, hm, &b3, &b4);
    const double j12 = (a3 - b3) / (hp - hm);
    const double j22 = (a4 - b4) / (hp - hm);

    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-14) break;
    const double step_k = (-r3 * j22 + r4 * j12) / det;
    const double step_h = (-r4 * j11 + r3 * j21) / det;

    // Damped step: first halving that lands feasible and reduces the
    // residual.
    bool advanced = false;
    double scale = 1.0;
    for (int half = 0; half < 25; ++half, scale *= 0.5) {
      const double nk = k + scale * step_k;
      const double nh = h + scale * step_h;
      if (!kappa_feasible(nk, nh)) continue;
      double n3, n4;
      const double nnorm = residual_norm(nk, nh, &n3, &n4);
      if (std::isfinite(nnorm) && nnorm < norm) {
        k = nk;
        h = nh;
        r3 = n3;
        r4 = n4;
        norm = nnorm;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (norm < kTol) converged = true;

  if (!converged) {
    const GevParams gev = fit_gev(lm);
    return {{gev.mu, gev.sigma, gev.k, 0.0}, true};
  }

  const double q1 = kappa_q(k, h, 1);
  const double q2 = kappa_q(k, h, 2);
  Kappa4Fit fit;
  fit.params.k = k;
  fit.params.h = h;
  fit.params.alpha = lm.l2 / (q2 - q1);
  fit.params.xi = lm.l1 - fit.params.alpha * q1;
  fit.params.validate();
  return fit;
}

double gev_quantile(const GevParams& p, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ArgumentError("quantile argument must lie in (0,1)");
  }
  const double y = -std::log(u);  // standard exponential variate
  if (std::abs(p.k) < kShapeEps) {
    return p.mu - p.sigma * std::log(y);
  }
  return p.mu + p.sigma * (-std::expm1(p.k * std::log(y))) / p.k;
}

double gev_cdf(const GevParams& p, double x) {
  const double z = (x - p.mu) / p.sigma;
  double t;  // exp(-t) is the CDF
  if (std::abs(p.k) < kShapeEps) {
    t = std::exp(-z);
  } else {
    const double w = 1.0 - p.k * z;
    if (w <= 0.0) return p.k > 0.0 ? 1.0 : 0.0;  // beyond the support endpoint
    t = std::exp(std::log(w) / p.k);
  }
  return std::exp(-t);
}

double kappa4_quantile(const Kappa4Params& p, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ArgumentError("quantile argument must lie in (0,1)");
  }
  // y = (1 - u^h)/h, the h=0 limit being -ln u.
  const double y = p.h == 0.0 ? -std::log(u)
                              : -std::expm1(p.h * std::log(u)) / p.h;
  if (std::abs(p.k) < kShapeEps) {
    return p.xi - p.alpha * std::log(y);
  }
  return p.xi + p.alpha * (-std::expm1(p.k * std::log(y))) / p.k;
}

double kappa4_cdf(const Kappa4Params& p, double x) {
  const double z = (x - p.xi) / p.alpha;
  double y;  // the inner (1 - k z)^(1/k) term
  if (std::abs(p.k) < kShapeEps) {
    y = std::exp(-z);
  } else {
    const double w = 1.0 - p.k * z;
    if (w <= 0.0) return p.k > 0.0 ? 1.0 : 0.0;
    y = std::exp(std::log(w) / p.k);
  }
  if (p.h == 0.0) return std::exp(-y);
  const double inner = 1.0 - p.h * y;
  if (inner <= 0.0) return 0.0;  // below the h>0 lower endpoint
  const double f = std::exp(std::log1p(-p.h * y) / p.h);
  return std::min(1.0, std::max(0.0, f));
}

std::vector<double> sample_gev(const GevParams& p, std::size_t n,
                               std::uint64_t seed) {
  p.validate();
  std::vector<double> out;
  out.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(gev_quantile(p, rng.uniform01()));
  }
  return out;
}

std::vector<double> sample_kappa4(const Kappa4Params& p, std::size_t n,
                                  std::uint64_t seed) {
  p.validate();
  std::vector<double> out;
  out.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(kappa4_quantile(p, rng.uniform01()));
  }
  return out;
}

LMoments population_lmoments(const GevParams& p) {
  Kappa4Params as_kappa{p.mu, p.sigma, p.k, 0.0};
  return population_lmoments(as_kappa);
}

LMoments population_lmoments(const Kappa4Params& p) {
  p.validate();
  const double q1 = kappa_q(p.k, p.h, 1);
  const double q2 = kappa_q(p.k, p.h, 2);
  const KappaRatios r = kappa_ratios(p.k, p.h);
  LMoments lm;
  lm.l1 = p.xi + p.alpha * q1;
  lm.l2 = p.alpha * (q2 - q1);
  lm.t3 = r.t3;
  lm.t4 = r.t4;
  lm.n = 0;
  lm.ratios_defined = true;
  return lm;
}

NormalParams fit_normal(const LMoments& lm) {
  if (!(lm.l2 > 0.0)) {
    throw NumericError("degenerate L-moments: l2 must be positive");
  }
  return {lm.l1, lm.l2 * std::sqrt(M_PI)};
}

double normal_cdf(const NormalParams& p, double x) {
  return 0.5 * std::erfc(-(x - p.mu) / (p.sigma * std::sqrt(2.0)));
}

}  // namespace cnplace
