#ifndef HHNET_FIT_HPP
#define HHNET_FIT_HPP

#include <cstdint>
#include <vector>

#include "hhnet/parameters.hpp"
#include "hhnet/sharing.hpp"
#include "hhnet/types.hpp"

namespace hhnet {

struct FitOptions {
  double grad_tol = 1e-6;      // gradient sup-norm in the transformed space
  double step_tol = 1e-9;      // parameter-change convergence threshold
  int max_iterations = 10000;
  double boundary_tol = 1e-4;  // estimates this close to 0 or 1 are flagged
};

struct FitResult {
  SharingMask mask;
  // maximizing free values after boundary snapping, one per free slot
  std::vector<double> free_estimates;
  // the interior values the optimizer actually stopped at; warm starts use
  // these because snapped values sit outside the transformed space
  std::vector<double> free_estimates_raw;
  // expanded per-stratum-value parameter vectors (one entry when unstratified)
  std::vector<ParameterVector> theta;
  double loglik = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<int> boundary_flags;  // free slots within boundary_tol of 0 or 1

  const ParameterVector &theta_hat() const { return theta.front(); }
};

// Maximum-likelihood fit.  Probabilities are optimized through a logistic
// transform so the optimizer works on an unconstrained space; estimates that
// land within boundary_tol of 0 or 1 are snapped exactly to the boundary
// whenever that does not lower the log-likelihood, and flagged either way.
FitResult fit_mle(const std::vector<RespondentRecord> &data,
                  const ParameterVector &init, const SharingMask &mask,
                  const FitOptions &options = {});

// identity mask, default starting point
FitResult fit_mle(const std::vector<RespondentRecord> &data,
                  const FitOptions &options = {});

// total log-likelihood of a stratified fit evaluated with the public
// per-record path: the records of each stratum value under its own theta
double stratified_loglik(const std::vector<RespondentRecord> &data,
                         const SharingMask &mask,
                         const std::vector<ParameterVector> &theta);

namespace detail {

// records grouped by identical (category, composition, contacts) per stratum
// value, so one objective evaluation touches each distinct pattern once
struct WeightedDataset {
  struct Group {
    RespondentRecord rec;
    double weight;
  };
  // outer index: stratum value (single entry for identity masks)
  std::vector<std::vector<Group>> groups;

  WeightedDataset(const std::vector<RespondentRecord> &data, const SharingMask &mask);
  double loglik(const std::vector<ParameterVector> &theta) const;
};

double logit(double p);
double sigmoid(double x);

}  // namespace detail

}  // namespace hhnet

#endif
