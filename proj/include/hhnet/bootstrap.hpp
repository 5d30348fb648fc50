#ifndef HHNET_BOOTSTRAP_HPP
#define HHNET_BOOTSTRAP_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "hhnet/fit.hpp"

namespace hhnet {

struct BootstrapResult {
  int replicates_requested = 0;
  std::uint64_t seed = 0;
  SharingMask mask;
  // base-fit free estimates (the interval midpoints refer to these)
  std::vector<double> point_estimate;
  // free estimates of each successful replicate, in replicate order
  std::vector<std::vector<double>> replicates;
  // per free slot: 2.5 and 97.5 percentile of the replicate estimates
  std::vector<std::array<double, 2>> intervals;
  // true when every replicate produced the identical value
  std::vector<bool> degenerate;
  int excluded = 0;

  double lower(int slot) const { return intervals[slot][0]; }
  double upper(int slot) const { return intervals[slot][1]; }
};

// Nonparametric bootstrap over respondent-day records.  Each replicate
// resamples the records with replacement, refits warm-started at the base
// estimates, and falls back to the default starting point when the warm fit
// fails to converge; replicates that still fail are excluded and counted.
// Replicate r draws from the stream (seed, r), so results do not depend on
// thread scheduling.
BootstrapResult bootstrap(const std::vector<RespondentRecord> &data, int replicates,
                          std::uint64_t seed, const FitOptions &options = {},
                          int threads = 0, const FitResult *base = nullptr);

}  // namespace hhnet

#endif
