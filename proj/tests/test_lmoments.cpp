#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cnplace/lmoments.hpp"
#include "cnplace/errors.hpp"
#include "cnplace/rng.hpp"

using namespace cnplace;

TEST_CASE("hand-evaluated PWMs on {0,0,1,1}") {
  std::vector<double> xs = {0.0, 1.0, 0.0, 1.0};
  LMoments lm = sample_lmoments(xs);
  CHECK(lm.l1 == doctest::Approx(0.5));
  // b1 = (0*1/3 + 1*2/3 + 1)/4 = 5/12, so l2 = 2*5/12 - 1/2 = 1/3.
  CHECK(lm.l2 == doctest::Approx(1.0 / 3.0));
  CHECK(lm.n == 4);
}

TEST_CASE("constant sample: zero scale, undefined ratios") {
  std::vector<double> xs = {3.25, 3.25, 3.25, 3.25};
  LMoments lm = sample_lmoments(xs);
  CHECK(lm.l1 == doctest::Approx(3.25));
  CHECK(lm.l2 == 0.0);
  CHECK_FALSE(lm.ratios_defined);
  CHECK(std::isnan(lm.t3));
}

TEST_CASE("sample size below four is rejected") {
  std::vector<double> xs = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(sample_lmoments(xs), NumericError);
}

TEST_CASE("uniform draws approach the population L-moments") {
  Rng rng(2024);
  std::vector<double> xs;
  xs.reserve(10000);
  for (int i = 0; i < 10000; ++i) xs.push_back(rng.uniform01());
  LMoments lm = sample_lmoments(xs);
  CHECK(std::abs(lm.l1 - 0.5) < 0.01);
  CHECK(std::abs(lm.l2 - 1.0 / 6.0) < 0.01);
  CHECK(std::abs(lm.t3) < 0.01);
  CHECK(std::abs(lm.t4) < 0.01);
}

TEST_CASE("L-moments are affine-equivariant") {
  Rng rng(5);
  std::vector<double> xs;
  for (int i = 0; i < 200; ++i) xs.push_back(rng.uniform(-3.0, 7.0));
  LMoments base = sample_lmoments(xs);

  const double a = 2.5;
  const double b = -4.0;
  std::vector<double> ys;
  for (double x : xs) ys.push_back(a * x + b);
  LMoments scaled = sample_lmoments(ys);

  CHECK(std::abs(scaled.l1 - (a * base.l1 + b)) < 1e-12);
  CHECK(std::abs(scaled.l2 - a * base.l2) < 1e-12);
  CHECK(std::abs(scaled.t3 - base.t3) < 1e-12);
  CHECK(std::abs(scaled.t4 - base.t4) < 1e-12);
}

TEST_CASE("order statistics, not input order, drive the result") {
  std::vector<double> xs = {4.0, 1.0, 3.0, 2.0, 5.0};
  std::vector<double> sorted = {1.0, 2.0, 3.0, 4.0, 5.0};
  LMoments a = sample_lmoments(xs);
  LMoments b = sample_lmoments(sorted);
  CHECK(a.l1 == b.l1);
  CHECK(a.l2 == b.l2);
  CHECK(a.t3 == b.t3);
  CHECK(a.t4 == b.t4);
}
