#include "hhnet/stats.hpp"

#include <algorithm>
#include <cmath>

#include "hhnet/errors.hpp"

namespace hhnet {

namespace {

// series expansion of P(a, x), good for x < a + 1
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// modified Lentz continued fraction for Q(a, x), good for x >= a + 1
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0) throw InputError("gamma_q needs a > 0");
  if (x < 0.0) throw InputError("gamma_q needs x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi2_sf(double x, int df) {
  if (df < 1) throw InputError("chi-squared needs at least one degree of freedom");
  if (x < 0.0) throw InputError("chi-squared statistic must be non-negative");
  return gamma_q(0.5 * df, 0.5 * x);
}

double bonferroni(double alpha, int m) {
  if (m < 1) throw InputError("bonferroni needs at least one test");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("bonferroni needs alpha in (0, 1)");
  return alpha / m;
}

double quantile_sorted(const std::vector<double> &sorted, double q) {
  if (sorted.empty()) throw InputError("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("quantile level outside [0, 1]");
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = q * double(n - 1);
  const std::size_t lo = std::size_t(pos);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = pos - double(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double quantile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, q);
}

}  // namespace hhnet
