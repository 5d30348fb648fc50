#ifndef HHNET_LOGSPACE_HPP
#define HHNET_LOGSPACE_HPP

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace hhnet {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), stable; -inf is the additive identity
inline double log_sum_exp(double a, double b) {
  if (a == neg_inf) return b;
  if (b == neg_inf) return a;
  const double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// fixed left-to-right reduction so results are reproducible
inline double log_sum_exp(const std::vector<double> &v) {
  double m = neg_inf;
  for (double x : v)
    if (x > m) m = x;
  if (m == neg_inf) return neg_inf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// log(n!) via a cached table; households are small so the table stays short
double log_factorial(int n);

// log C(n, k); requires 0 <= k <= n
inline double log_choose(int n, int k) {
  assert(k >= 0 && k <= n);
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace hhnet

#endif
