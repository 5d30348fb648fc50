#include "hhnet/loglik.hpp"

#include <cmath>

#include "hhnet/errors.hpp"
#include "hhnet/logspace.hpp"

namespace hhnet {

namespace detail {

LoglikTables::LoglikTables(const ParameterVector &theta) : k(theta.categories()) {
  log_home.resize(k);
  log_away.resize(k);
  log_hit.resize(k * k);
  log_miss.resize(k * k);
  for (int j = 0; j < k; ++j) {
    const double pj = theta.home(j);
    log_home[j] = std::log(pj);
    log_away[j] = std::log1p(-pj);
    for (int s = 0; s < k; ++s) {
      const double q = theta.home(s) * theta.contact(j, s);
      log_hit[j * k + s] = std::log(q);
      log_miss[j * k + s] = std::log1p(-q);
    }
  }
}

double record_loglik(const RespondentRecord &rec, const LoglikTables &tables) {
  const int k = tables.k;
  const int j = rec.respondent_category.value;
  // log P(W = w | respondent home); terms with zero exponent are skipped so
  // 0 * log 0 never appears
  double cond = 0.0;
  bool any_contact = false;
  for (int s = 0; s < k; ++s) {
    const int n = rec.members.counts[s];
    const int w = rec.contacts.counts[s];
    if (n == 0) continue;
    if (w > 0) {
      any_contact = true;
      cond += log_choose(n, w) + w * tables.log_hit[j * k + s];
    }
    if (n - w > 0) cond += (n - w) * tables.log_miss[j * k + s];
  }
  const double home_branch = tables.log_home[j] + cond;
  if (any_contact) return home_branch;
  return log_sum_exp(tables.log_away[j], home_branch);
}

}  // namespace detail

double respondent_loglik(const RespondentRecord &rec, const ParameterVector &theta) {
  rec.validate(theta.categories());
  detail::LoglikTables tables(theta);
  return detail::record_loglik(rec, tables);
}

double dataset_loglik(const std::vector<RespondentRecord> &data,
                      const ParameterVector &theta) {
  detail::LoglikTables tables(theta);
  double total = 0.0;
  for (const auto &rec : data) {
    rec.validate(theta.categories());
    total += detail::record_loglik(rec, tables);
  }
  return total;
}

namespace {

// advance a per-category odometer bounded by limits; false when wrapped
bool next_config(std::vector<int> &h, const std::vector<int> &limits) {
  for (std::size_t s = 0; s < h.size(); ++s) {
    if (h[s] < limits[s]) {
      ++h[s];
      return true;
    }
    h[s] = 0;
  }
  return false;
}

}  // namespace

double brute_force_loglik(const RespondentRecord &rec, const ParameterVector &theta) {
  rec.validate(theta.categories());
  const int k = theta.categories();
  const int j = rec.respondent_category.value;
  std::vector<double> terms;

  const bool no_contacts = rec.contacts.total() == 0;
  if (no_contacts) terms.push_back(std::log1p(-theta.home(j)));

  std::vector<int> h(k, 0);
  do {
    // respondent home, members in h at home, the rest away, and exactly the
    // observed contacts drawn from the at-home members
    double t = std::log(theta.home(j));
    bool possible = true;
    for (int s = 0; s < k && possible; ++s) {
      const int n = rec.members.counts[s];
      const int w = rec.contacts.counts[s];
      if (w > h[s]) {
        possible = false;
        break;
      }
      const double ps = theta.home(s);
      const double pjs = theta.contact(j, s);
      t += log_choose(n, h[s]);
      if (h[s] > 0) t += h[s] * std::log(ps);
      if (n - h[s] > 0) t += (n - h[s]) * std::log1p(-ps);
      t += log_choose(h[s], w);
      if (w > 0) t += w * std::log(pjs);
      if (h[s] - w > 0) t += (h[s] - w) * std::log1p(-pjs);
    }
    if (possible) terms.push_back(t);
  } while (next_config(h, rec.members.counts));

  return log_sum_exp(terms);
}

}  // namespace hhnet
