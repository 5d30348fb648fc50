#ifndef HHNET_MODEL_SELECTION_HPP
#define HHNET_MODEL_SELECTION_HPP

#include <set>
#include <string>
#include <vector>

#include "hhnet/fit.hpp"

namespace hhnet {

struct LrtResult {
  double stat = 0.0;
  int df = 0;
  double p_value = 1.0;
  FitResult null_fit;  // shared parameters
  FitResult alt_fit;   // parameters split by the stratum, minus the tied ones
  std::vector<std::string> warnings;
};

// Likelihood-ratio test of parameter sharing across a binary stratum.  The
// null model shares all parameters; the alternative gives each stratum value
// its own copy of every parameter not listed in tied.  The alternative fit is
// warm-started at the null optimum, which guarantees its likelihood can only
// match or beat the null.
LrtResult lrt(const std::vector<RespondentRecord> &data, const std::string &stratum,
              const std::set<int> &tied, const FitOptions &options = {});

}  // namespace hhnet

#endif
