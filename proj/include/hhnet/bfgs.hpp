#ifndef HHNET_BFGS_HPP
#define HHNET_BFGS_HPP

#include <functional>
#include <vector>

namespace hhnet {

struct BfgsOptions {
  double grad_tol = 1e-6;       // stop when the sup-norm gradient drops below
  double step_tol = 1e-9;       // or when an accepted step moves less than this
  int max_iterations = 10000;
  double fd_step = 1e-6;        // relative central-difference step
};

struct BfgsResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
};

using Objective = std::function<double(const std::vector<double> &)>;

// central finite differences, step scaled by max(1, |x_i|)
std::vector<double> fd_gradient(const Objective &f, const std::vector<double> &x,
                                double step);

// Dense quasi-Newton minimizer with backtracking line search and numerical
// gradients.  The objective may return +inf to mark infeasible points; the
// line search treats those as failures.
BfgsResult minimize_bfgs(const Objective &f, std::vector<double> x0,
                         const BfgsOptions &options = {});

}  // namespace hhnet

#endif
