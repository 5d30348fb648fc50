#include <doctest.h>

#include <cmath>

#include "hhnet/logspace.hpp"

using namespace hhnet;

TEST_CASE("log_sum_exp basics") {
  CHECK(log_sum_exp(std::log(0.3), std::log(0.2)) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(log_sum_exp(neg_inf, std::log(0.7)) == doctest::Approx(std::log(0.7)));
  CHECK(log_sum_exp(std::log(0.7), neg_inf) == doctest::Approx(std::log(0.7)));
  CHECK(log_sum_exp(neg_inf, neg_inf) == neg_inf);
  // extreme magnitudes do not overflow
  CHECK(log_sum_exp(-1000.0, -1000.0) == doctest::Approx(-1000.0 + std::log(2.0)));
  CHECK(log_sum_exp(1000.0, -1000.0) == doctest::Approx(1000.0));
}

TEST_CASE("log_sum_exp over vectors matches repeated pairwise") {
  std::vector<double> v{-3.0, -1.5, -20.0, -0.2};
  double pair = neg_inf;
  for (double x : v) pair = log_sum_exp(pair, x);
  CHECK(log_sum_exp(v) == doctest::Approx(pair).epsilon(1e-14));
  CHECK(log_sum_exp(std::vector<double>{}) == neg_inf);
  CHECK(log_sum_exp(std::vector<double>{neg_inf, neg_inf}) == neg_inf);
}

TEST_CASE("log_factorial and log_choose") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(log_choose(12, 5) == doctest::Approx(std::log(792.0)).epsilon(1e-13));
  CHECK(log_choose(4, 0) == 0.0);
  CHECK(log_choose(4, 4) == 0.0);
  // beyond the cached range still works
  CHECK(log_factorial(300) == doctest::Approx(std::lgamma(301.0)).epsilon(1e-13));
}
