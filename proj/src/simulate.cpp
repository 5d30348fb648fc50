#include "hhnet/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "hhnet/errors.hpp"
#include "hhnet/parallel.hpp"
#include "hhnet/stats.hpp"

namespace hhnet {

void SimDesign::validate() const {
  const int k = bins.count();
  if (theta.categories() != k)
    throw InputError("design parameters do not match the age bins");
  if (cells.empty()) throw InputError("design has no composition cells");
  for (const SimCell &cell : cells) {
    cell.members.validate(k);
    if (cell.respondent.value < 0 || cell.respondent.value >= k)
      throw InputError("design cell has a respondent category out of range");
    if (cell.count < 1) throw InputError("design cell count must be positive");
  }
  if (replicates < 1) throw InputError("design needs at least one replicate");
}

RespondentRecord simulate_record(AgeCategory j, const HouseholdComposition &members,
                                 const ParameterVector &theta, RngStream &rng,
                                 std::string id) {
  const int k = theta.categories();
  members.validate(k);
  RespondentRecord rec;
  rec.id = std::move(id);
  rec.respondent_category = j;
  rec.members = members;
  rec.contacts.counts.assign(k, 0);
  const bool respondent_home = rng.bernoulli(theta.home(j.value));
  for (int s = 0; s < k; ++s) {
    const int at_home = rng.binomial(members.counts[s], theta.home(s));
    if (respondent_home)
      rec.contacts.counts[s] = rng.binomial(at_home, theta.contact(j.value, s));
  }
  rec.strata["weekend"] = false;
  rec.strata["holiday"] = false;
  rec.strata["large_household"] = derive_large_household(rec.members);
  return rec;
}

std::vector<RespondentRecord> simulate_dataset(const SimDesign &design, int replicate) {
  design.validate();
  RngStream rng(design.seed, std::uint64_t(replicate));
  std::vector<RespondentRecord> data;
  for (std::size_t c = 0; c < design.cells.size(); ++c) {
    const SimCell &cell = design.cells[c];
    for (long i = 0; i < cell.count; ++i) {
      std::string id = "r" + std::to_string(replicate) + "-c" + std::to_string(c) +
                       "-" + std::to_string(i);
      data.push_back(
          simulate_record(cell.respondent, cell.members, design.theta, rng, id));
    }
  }
  return data;
}

RecoveryReport recovery_study(const SimDesign &design, const FitOptions &options,
                              int threads) {
  design.validate();
  const int k = design.bins.count();
  const int pcount = parameter_count(k);

  RecoveryReport report;
  report.truth = design.theta;
  report.replicates = design.replicates;

  std::vector<std::vector<double>> slots(design.replicates);
  std::vector<char> ok(design.replicates, 0);
  parallel_for(design.replicates, threads, [&](int r) {
    std::vector<RespondentRecord> data = simulate_dataset(design, r);
    FitResult fit = fit_mle(data, options);
    if (fit.converged) {
      slots[r] = fit.free_estimates;
      ok[r] = 1;
    }
  });

  for (int r = 0; r < design.replicates; ++r) {
    if (ok[r]) report.estimates.push_back(std::move(slots[r]));
    else ++report.non_converged;
  }
  if (report.estimates.empty())
    throw InputError("no recovery replicate converged");

  report.mean_estimate.assign(pcount, 0.0);
  report.quantile_range.resize(pcount);
  std::vector<double> column(report.estimates.size());
  for (int p = 0; p < pcount; ++p) {
    double sum = 0.0;
    for (std::size_t r = 0; r < report.estimates.size(); ++r) {
      column[r] = report.estimates[r][p];
      sum += column[r];
    }
    report.mean_estimate[p] = sum / double(report.estimates.size());
    std::sort(column.begin(), column.end());
    report.quantile_range[p] = {quantile_sorted(column, 0.025),
                                quantile_sorted(column, 0.975)};
  }
  return report;
}

std::vector<ValidityRow> validity_check(const std::vector<RespondentRecord> &data,
                                        const FitResult &fit,
                                        const BootstrapResult &boots) {
  if (data.empty()) throw InputError("validity check needs data");
  if (fit.mask.stratified() || boots.mask.stratified())
    throw InputError("validity check needs an unstratified fit");
  const int k = data.front().members.categories();

  std::vector<long> total(k, 0), reporting(k, 0);
  for (const RespondentRecord &rec : data) {
    ++total[rec.respondent_category.value];
    if (rec.contacts.total() > 0) ++reporting[rec.respondent_category.value];
  }

  std::vector<ValidityRow> rows;
  for (int v = 0; v < k; ++v) {
    ValidityRow row;
    row.category = AgeCategory{v};
    row.respondents = total[v];
    row.estimate = fit.theta_hat().home(v);
    row.estimate_interval = {boots.lower(v), boots.upper(v)};
    if (total[v] == 0) {
      row.empty = true;
      rows.push_back(row);
      continue;
    }
    const double share = double(reporting[v]) / double(total[v]);
    const double se = std::sqrt(share * (1.0 - share) / double(total[v]));
    row.observed_share = share;
    row.share_interval = {std::max(0.0, share - 1.96 * se),
                          std::min(1.0, share + 1.96 * se)};
    row.flagged = row.share_interval[1] < row.estimate_interval[0] ||
                  row.estimate_interval[1] < row.share_interval[0];
    rows.push_back(row);
  }
  return rows;
}

ParameterVector low_contact_preset(int k) {
  return ParameterVector::constant(k, 0.6, 0.5);
}

}  // namespace hhnet
