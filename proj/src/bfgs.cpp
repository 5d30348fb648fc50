#include "hhnet/bfgs.hpp"

#include <cmath>
#include <cstddef>

namespace hhnet {

std::vector<double> fd_gradient(const Objective &f, const std::vector<double> &x,
                                double step) {
  const std::size_t n = x.size();
  std::vector<double> g(n), probe = x;
  for (std::size_t i = 0; i < n; ++i) {
    const double h = step * std::max(1.0, std::fabs(x[i]));
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

namespace {

double sup_norm(const std::vector<double> &v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

BfgsResult minimize_bfgs(const Objective &f, std::vector<double> x0,
                         const BfgsOptions &opt) {
  const std::size_t n = x0.size();
  BfgsResult res;
  res.x = std::move(x0);
  res.f = f(res.x);
  if (n == 0) {
    res.converged = true;
    return res;
  }

  // inverse Hessian approximation, dense row-major
  std::vector<double> H(n * n, 0.0);
  auto reset_H = [&] {
    std::fill(H.begin(), H.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;
  };
  reset_H();

  std::vector<double> g = fd_gradient(f, res.x, opt.fd_step);
  std::vector<double> d(n), x_new(n), g_new(n), s(n), y(n), Hy(n);
  bool fresh_H = true;

  for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
    if (sup_norm(g) < opt.grad_tol) {
      res.converged = true;
      return res;
    }

    // d = -H g
    double dg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * g[j];
      d[i] = -acc;
      dg += d[i] * g[i];
    }
    if (!(dg < 0.0)) {  // not a descent direction, restart from steepest descent
      reset_H();
      fresh_H = true;
      dg = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = -g[i];
        dg += d[i] * g[i];
      }
      if (!(dg < 0.0)) {
        res.converged = true;  // zero gradient to working precision
        return res;
      }
    }

    // backtracking Armijo search
    double alpha = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int trial = 0; trial < 60; ++trial) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + alpha * d[i];
      f_new = f(x_new);
      if (std::isfinite(f_new) && f_new <= res.f + 1e-4 * alpha * dg) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (!fresh_H) {  // one retry along steepest descent
        reset_H();
        fresh_H = true;
        continue;
      }
      // no movement possible: parameter change is zero, report converged
      res.converged = true;
      return res;
    }

    double step_size = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - res.x[i];
      step_size = std::max(step_size, std::fabs(s[i]));
    }
    g_new = fd_gradient(f, x_new, opt.fd_step);
    for (std::size_t i = 0; i < n; ++i) y[i] = g_new[i] - g[i];
    res.x = x_new;
    res.f = f_new;
    g = g_new;

    if (step_size < opt.step_tol) {
      res.converged = true;
      return res;
    }

    // BFGS update of the inverse Hessian; skipped when curvature is unusable
    double ys = 0.0;
    for (std::size_t i = 0; i < n; ++i) ys += y[i] * s[i];
    if (ys > 1e-12) {
      double yHy = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * y[j];
        Hy[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) yHy += y[i] * Hy[i];
      const double c1 = (ys + yHy) / (ys * ys);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          H[i * n + j] += c1 * s[i] * s[j] -
                          (Hy[i] * s[j] + s[i] * Hy[j]) / ys;
      fresh_H = false;
    }
  }

  res.converged = sup_norm(g) < opt.grad_tol;
  return res;
}

}  // namespace hhnet
