#include "hhnet/model_selection.hpp"

#include <cmath>
#include <stdexcept>

#include "hhnet/errors.hpp"
#include "hhnet/stats.hpp"

namespace hhnet {

LrtResult lrt(const std::vector<RespondentRecord> &data, const std::string &stratum,
              const std::set<int> &tied, const FitOptions &options) {
  if (data.empty()) throw InputError("cannot test an empty dataset");
  if (!known_strata().count(stratum)) throw InputError("unknown stratum: " + stratum);
  const int k = data.front().members.categories();
  const int pcount = parameter_count(k);

  LrtResult res;

  bool any_true = false, any_false = false;
  for (const RespondentRecord &rec : data)
    (rec.stratum(stratum) ? any_true : any_false) = true;
  if (!any_true || !any_false)
    res.warnings.push_back("stratum " + stratum +
                           " is constant in the data; the split parameters are "
                           "unidentified and stay at their starting values");

  res.null_fit = fit_mle(data, default_init(k), SharingMask::identity(pcount), options);

  // start the alternative at the null optimum so nesting holds numerically
  ParameterVector warm(k);
  for (int p = 0; p < pcount; ++p) warm.set(p, res.null_fit.free_estimates_raw[p]);
  SharingMask alt_mask = SharingMask::split(pcount, stratum, tied);
  res.alt_fit = fit_mle(data, warm, alt_mask, options);

  if (!res.null_fit.converged)
    res.warnings.push_back("null fit did not converge");
  if (!res.alt_fit.converged)
    res.warnings.push_back("alternative fit did not converge");
  if (!res.null_fit.boundary_flags.empty() || !res.alt_fit.boundary_flags.empty())
    res.warnings.push_back(
        "estimates on the boundary; the chi-squared reference is approximate");

  double stat = 2.0 * (res.alt_fit.loglik - res.null_fit.loglik);
  if (stat < 0.0) {
    if (stat < -1e-6)
      throw std::logic_error(
          "alternative fit lost likelihood against the nested null");
    stat = 0.0;
  }
  res.stat = stat;
  res.df = alt_mask.free_count() - pcount;
  res.p_value = res.df == 0 ? 1.0 : chi2_sf(res.stat, res.df);
  return res;
}

}  // namespace hhnet
