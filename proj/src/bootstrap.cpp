#include "hhnet/bootstrap.hpp"

#include <algorithm>

#include "hhnet/errors.hpp"
#include "hhnet/parallel.hpp"
#include "hhnet/rng.hpp"
#include "hhnet/stats.hpp"

namespace hhnet {

BootstrapResult bootstrap(const std::vector<RespondentRecord> &data, int replicates,
                          std::uint64_t seed, const FitOptions &options, int threads,
                          const FitResult *base) {
  if (replicates < 1) throw InputError("bootstrap needs at least one replicate");
  if (data.empty()) throw InputError("cannot bootstrap an empty dataset");
  const int k = data.front().members.categories();

  FitResult base_fit;
  if (base) {
    base_fit = *base;
  } else {
    base_fit = fit_mle(data, options);
  }
  const SharingMask &mask = base_fit.mask;

  ParameterVector warm(k);
  const bool identity = !mask.stratified();
  // warm starts reuse the interior estimates; for stratified masks the warm
  // point is rebuilt per replicate below from the raw free values
  if (identity)
    for (int p = 0; p < mask.param_count(); ++p)
      warm.set(p, base_fit.free_estimates_raw[p]);

  const int n = int(data.size());
  std::vector<std::vector<double>> slots(replicates);
  std::vector<char> ok(replicates, 0);

  parallel_for(replicates, threads, [&](int r) {
    RngStream rng(seed, std::uint64_t(r));
    std::vector<RespondentRecord> sample;
    sample.reserve(n);
    for (int i = 0; i < n; ++i) sample.push_back(data[rng.bounded(n)]);
    try {
      FitResult fit;
      if (identity) {
        fit = fit_mle(sample, warm, mask, options);
      } else {
        // expand the raw free values through the mask's own structure
        std::vector<double> x = base_fit.free_estimates_raw;
        std::vector<ParameterVector> warm_theta = mask.expand(x, k);
        fit = fit_mle(sample, warm_theta.front(), mask, options);
      }
      if (!fit.converged) fit = fit_mle(sample, default_init(k), mask, options);
      if (fit.converged) {
        slots[r] = fit.free_estimates;
        ok[r] = 1;
      }
    } catch (const std::exception &) {
      // degenerate resample; excluded below
    }
  });

  BootstrapResult res;
  res.replicates_requested = replicates;
  res.seed = seed;
  res.mask = mask;
  res.point_estimate = base_fit.free_estimates;
  for (int r = 0; r < replicates; ++r) {
    if (ok[r]) res.replicates.push_back(std::move(slots[r]));
    else ++res.excluded;
  }
  if (res.replicates.empty())
    throw InputError("every bootstrap replicate failed to converge");

  const int nfree = mask.free_count();
  res.intervals.resize(nfree);
  res.degenerate.assign(nfree, false);
  std::vector<double> column(res.replicates.size());
  for (int p = 0; p < nfree; ++p) {
    for (std::size_t r = 0; r < res.replicates.size(); ++r)
      column[r] = res.replicates[r][p];
    std::sort(column.begin(), column.end());
    res.intervals[p] = {quantile_sorted(column, 0.025), quantile_sorted(column, 0.975)};
    res.degenerate[p] = column.front() == column.back();
  }
  return res;
}

}  // namespace hhnet
