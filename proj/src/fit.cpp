#include "hhnet/fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hhnet/bfgs.hpp"
#include "hhnet/errors.hpp"
#include "hhnet/loglik.hpp"
#include "hhnet/logspace.hpp"

namespace hhnet {

namespace detail {

double logit(double p) { return std::log(p) - std::log1p(-p); }

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

WeightedDataset::WeightedDataset(const std::vector<RespondentRecord> &data,
                                 const SharingMask &mask) {
  groups.resize(mask.stratum_values());
  std::vector<std::map<std::vector<int>, double>> counts(mask.stratum_values());
  for (const RespondentRecord &rec : data) {
    const int v = mask.stratified() ? (rec.stratum(mask.stratum()) ? 1 : 0) : 0;
    std::vector<int> key;
    key.push_back(rec.respondent_category.value);
    key.insert(key.end(), rec.members.counts.begin(), rec.members.counts.end());
    key.insert(key.end(), rec.contacts.counts.begin(), rec.contacts.counts.end());
    counts[v][key] += 1.0;
  }
  const int k = data.empty() ? 0 : data.front().members.categories();
  for (int v = 0; v < mask.stratum_values(); ++v) {
    for (const auto &[key, weight] : counts[v]) {
      Group g;
      g.rec.id = "group";
      g.rec.respondent_category = AgeCategory{key[0]};
      g.rec.members.counts.assign(key.begin() + 1, key.begin() + 1 + k);
      g.rec.contacts.counts.assign(key.begin() + 1 + k, key.end());
      g.weight = weight;
      groups[v].push_back(std::move(g));
    }
  }
}

double WeightedDataset::loglik(const std::vector<ParameterVector> &theta) const {
  double total = 0.0;
  for (std::size_t v = 0; v < groups.size(); ++v) {
    if (groups[v].empty()) continue;
    LoglikTables tables(theta[v]);
    for (const Group &g : groups[v])
      total += g.weight * record_loglik(g.rec, tables);
  }
  return total;
}

}  // namespace detail

double stratified_loglik(const std::vector<RespondentRecord> &data,
                         const SharingMask &mask,
                         const std::vector<ParameterVector> &theta) {
  if (!mask.stratified()) return dataset_loglik(data, theta.front());
  std::vector<RespondentRecord> part[2];
  for (const RespondentRecord &rec : data)
    part[rec.stratum(mask.stratum()) ? 1 : 0].push_back(rec);
  return dataset_loglik(part[0], theta[0]) + dataset_loglik(part[1], theta[1]);
}

FitResult fit_mle(const std::vector<RespondentRecord> &data,
                  const ParameterVector &init, const SharingMask &mask,
                  const FitOptions &options) {
  if (data.empty()) throw InputError("cannot fit an empty dataset");
  const int k = data.front().members.categories();
  for (const RespondentRecord &rec : data) rec.validate(k);
  if (init.categories() != k)
    throw InputError("starting point has the wrong number of categories");
  if (mask.param_count() != parameter_count(k))
    throw InputError("sharing mask does not match the parameter count");

  std::vector<double> free0 = mask.collapse(init);
  {
    std::vector<ParameterVector> theta0 = mask.expand(free0, k);
    const double ll0 = stratified_loglik(data, mask, theta0);
    if (!std::isfinite(ll0))
      throw InputError("starting point has zero likelihood for the data");
  }

  // move exactly-boundary starting values a hair inside so the transform is finite
  for (double &p : free0) p = std::clamp(p, 1e-7, 1.0 - 1e-7);

  detail::WeightedDataset grouped(data, mask);
  const int nfree = mask.free_count();
  std::vector<double> probs(nfree);
  auto objective = [&](const std::vector<double> &x) {
    std::vector<double> p(nfree);
    for (int i = 0; i < nfree; ++i) p[i] = detail::sigmoid(x[i]);
    std::vector<ParameterVector> theta = mask.expand(p, k);
    const double ll = grouped.loglik(theta);
    return std::isfinite(ll) ? -ll : std::numeric_limits<double>::infinity();
  };

  std::vector<double> x0(nfree);
  for (int i = 0; i < nfree; ++i) x0[i] = detail::logit(free0[i]);

  BfgsOptions bopt;
  bopt.grad_tol = options.grad_tol;
  bopt.step_tol = options.step_tol;
  bopt.max_iterations = options.max_iterations;
  BfgsResult opt = minimize_bfgs(objective, std::move(x0), bopt);

  FitResult res;
  res.mask = mask;
  res.converged = opt.converged;
  res.iterations = opt.iterations;
  res.free_estimates_raw.resize(nfree);
  for (int i = 0; i < nfree; ++i)
    res.free_estimates_raw[i] = detail::sigmoid(opt.x[i]);

  // snap near-boundary estimates when doing so does not cost likelihood
  res.free_estimates = res.free_estimates_raw;
  std::vector<ParameterVector> theta = mask.expand(res.free_estimates, k);
  double best = stratified_loglik(data, mask, theta);
  for (int i = 0; i < nfree; ++i) {
    const double p = res.free_estimates[i];
    double target;
    if (p <= options.boundary_tol) target = 0.0;
    else if (p >= 1.0 - options.boundary_tol) target = 1.0;
    else continue;
    std::vector<double> trial = res.free_estimates;
    trial[i] = target;
    std::vector<ParameterVector> theta_trial = mask.expand(trial, k);
    const double ll = stratified_loglik(data, mask, theta_trial);
    if (ll >= best - 1e-9) {
      res.free_estimates = std::move(trial);
      theta = std::move(theta_trial);
      best = ll;
    }
  }

  for (int i = 0; i < nfree; ++i) {
    const double p = res.free_estimates[i];
    if (p <= options.boundary_tol || p >= 1.0 - options.boundary_tol)
      res.boundary_flags.push_back(i);
  }

  // never report a point worse than the starting one
  std::vector<ParameterVector> theta_init = mask.expand(free0, k);
  const double ll_init = stratified_loglik(data, mask, theta_init);
  if (best < ll_init) {
    res.free_estimates = free0;
    res.free_estimates_raw = free0;
    theta = theta_init;
    best = ll_init;
    res.boundary_flags.clear();
    for (int i = 0; i < nfree; ++i) {
      const double p = free0[i];
      if (p <= options.boundary_tol || p >= 1.0 - options.boundary_tol)
        res.boundary_flags.push_back(i);
    }
  }

  res.theta = std::move(theta);
  res.loglik = best;
  return res;
}

FitResult fit_mle(const std::vector<RespondentRecord> &data, const FitOptions &options) {
  if (data.empty()) throw InputError("cannot fit an empty dataset");
  const int k = data.front().members.categories();
  return fit_mle(data, default_init(k), SharingMask::identity(parameter_count(k)),
                 options);
}

}  // namespace hhnet
