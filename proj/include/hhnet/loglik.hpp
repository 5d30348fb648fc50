#ifndef HHNET_LOGLIK_HPP
#define HHNET_LOGLIK_HPP

#include <vector>

#include "hhnet/parameters.hpp"
#include "hhnet/types.hpp"

namespace hhnet {

// which household members are at home in one latent configuration
struct HomeConfiguration {
  bool respondent_home = false;
  std::vector<int> at_home;  // per category, 0..n_s
};

// log P(W = w) for one respondent-day.  Uses the closed form obtained by
// summing out the latent at-home counts: given the respondent is home, each
// member independently ends up a reported contact with probability
// p_s * p_js, so W_s | home ~ Binomial(n_s, p_s * p_js).
double respondent_loglik(const RespondentRecord &rec, const ParameterVector &theta);

// same quantity by literal enumeration of every (respondent home, at-home
// members) configuration; kept as a slow cross-check for the fast path
double brute_force_loglik(const RespondentRecord &rec, const ParameterVector &theta);

// sum of respondent_loglik over records, in input order
double dataset_loglik(const std::vector<RespondentRecord> &data,
                      const ParameterVector &theta);

namespace detail {

// per-theta log tables shared across records during a fit
struct LoglikTables {
  int k = 0;
  std::vector<double> log_home;        // log p_j
  std::vector<double> log_away;        // log (1 - p_j)
  std::vector<double> log_hit;         // [j*k+s] log(p_s * p_js)
  std::vector<double> log_miss;        // [j*k+s] log(1 - p_s * p_js)

  explicit LoglikTables(const ParameterVector &theta);
};

double record_loglik(const RespondentRecord &rec, const LoglikTables &tables);

}  // namespace detail

}  // namespace hhnet

#endif
