#ifndef HHNET_SIMULATE_HPP
#define HHNET_SIMULATE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hhnet/bootstrap.hpp"
#include "hhnet/fit.hpp"
#include "hhnet/rng.hpp"
#include "hhnet/types.hpp"

namespace hhnet {

// one simulated stratum of respondent-days: respondent category, household
// composition, number of records to draw
struct SimCell {
  AgeCategory respondent;
  HouseholdComposition members;
  long count = 0;
};

struct SimDesign {
  AgeBins bins;
  std::vector<SimCell> cells;
  ParameterVector theta;
  int replicates = 1;
  std::uint64_t seed = 0;

  SimDesign() : theta(bins.count()) {}
  void validate() const;
};

// draw one respondent-day under the model: the respondent is home with its
// at-home probability, each member is home independently, and each at-home
// member is a reported contact with the pair's contact probability
RespondentRecord simulate_record(AgeCategory j, const HouseholdComposition &members,
                                 const ParameterVector &theta, RngStream &rng,
                                 std::string id);

// all cells of one replicate; replicate r draws from the stream (seed, r)
std::vector<RespondentRecord> simulate_dataset(const SimDesign &design, int replicate);

struct RecoveryReport {
  ParameterVector truth;
  int replicates = 0;
  int non_converged = 0;
  // flat estimates per converged replicate, in replicate order
  std::vector<std::vector<double>> estimates;
  std::vector<double> mean_estimate;
  std::vector<std::array<double, 2>> quantile_range;  // 2.5 to 97.5 percentile

  RecoveryReport() : truth(1) {}
};

// simulate-and-refit study: how well does the fit recover the generating
// parameters across replicate datasets
RecoveryReport recovery_study(const SimDesign &design, const FitOptions &options = {},
                              int threads = 0);

// per age category: the fitted at-home probability with its bootstrap
// interval, against the observed share of respondents reporting any
// within-household contact, with a normal-approximation interval
struct ValidityRow {
  AgeCategory category;
  long respondents = 0;
  double estimate = 0.0;
  std::array<double, 2> estimate_interval{0.0, 0.0};
  double observed_share = 0.0;
  std::array<double, 2> share_interval{0.0, 0.0};
  bool empty = false;    // no respondents in this category
  bool flagged = false;  // intervals disjoint
};

std::vector<ValidityRow> validity_check(const std::vector<RespondentRecord> &data,
                                        const FitResult &fit,
                                        const BootstrapResult &boots);

// generating values for a deliberately sparse scenario: at-home 0.6, contact 0.5
ParameterVector low_contact_preset(int k);

}  // namespace hhnet

#endif
