#ifndef HHNET_STATS_HPP
#define HHNET_STATS_HPP

#include <vector>

namespace hhnet {

// P(X > x) for X ~ chi-squared with df degrees of freedom; df >= 1, x >= 0
double chi2_sf(double x, int df);

// regularized upper incomplete gamma Q(a, x)
double gamma_q(double a, double x);

// per-test level for m simultaneous tests
double bonferroni(double alpha, int m);

// linear-interpolation sample quantile on sorted data, q in [0, 1]
double quantile_sorted(const std::vector<double> &sorted, double q);

// convenience: copies, sorts, interpolates
double quantile(std::vector<double> values, double q);

}  // namespace hhnet

#endif
