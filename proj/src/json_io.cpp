#include "hhnet/json_io.hpp"

#include <fstream>

#include "hhnet/errors.hpp"

namespace hhnet {

Json bins_to_json(const AgeBins &bins) { return Json(bins.boundaries()); }

AgeBins bins_from_json(const Json &j) {
  if (!j.is_array()) throw InputError("bins must be an array of boundaries");
  std::vector<int> b;
  for (const auto &x : j) b.push_back(x.get<int>());
  return AgeBins(b);
}

Json named_params(const ParameterVector &theta, const AgeBins &bins) {
  if (theta.categories() != bins.count())
    throw InputError("parameters do not match the age bins");
  Json out = Json::object();
  const std::vector<std::string> names = parameter_names(bins);
  for (int p = 0; p < theta.size(); ++p) out[names[p]] = theta[p];
  return out;
}

ParameterVector named_params_from_json(const Json &j, const AgeBins &bins) {
  if (!j.is_object()) throw InputError("theta must be an object of named values");
  ParameterVector theta(bins.count());
  std::vector<bool> seen(theta.size(), false);
  for (const auto &[name, value] : j.items()) {
    const int p = parameter_index_from_name(name, bins);
    if (seen[p]) throw InputError("parameter " + name + " given twice");
    seen[p] = true;
    theta.set(p, value.get<double>());
  }
  const std::vector<std::string> names = parameter_names(bins);
  for (int p = 0; p < theta.size(); ++p)
    if (!seen[p]) throw InputError("missing parameter " + names[p]);
  return theta;
}

Json params_file_to_json(const ParameterVector &theta, const AgeBins &bins) {
  Json out;
  out["bins"] = bins_to_json(bins);
  out["theta"] = named_params(theta, bins);
  return out;
}

ParameterVector params_file_from_json(const Json &j, AgeBins *bins_out) {
  if (!j.contains("bins") || !j.contains("theta"))
    throw InputError("parameter file needs bins and theta");
  AgeBins bins = bins_from_json(j["bins"]);
  if (bins_out) *bins_out = bins;
  return named_params_from_json(j["theta"], bins);
}

std::vector<std::string> slot_names(const SharingMask &mask, const AgeBins &bins) {
  const std::vector<std::string> base = parameter_names(bins);
  if (int(base.size()) != mask.param_count())
    throw InputError("mask does not match the age bins");
  std::vector<std::string> names(mask.free_count());
  for (int v = 0; v < mask.stratum_values(); ++v) {
    for (int p = 0; p < mask.param_count(); ++p) {
      const int slot = mask.slot(v, p);
      if (!mask.stratified() || mask.tied().count(p)) {
        names[slot] = base[p];
      } else {
        names[slot] = base[p] + "[" + mask.stratum() + "=" + std::to_string(v) + "]";
      }
    }
  }
  return names;
}

Json fit_to_json(const FitResult &fit, const AgeBins &bins) {
  Json out;
  out["bins"] = bins_to_json(bins);
  if (fit.mask.stratified()) {
    out["stratum"] = fit.mask.stratum();
    out["theta"] = Json::object();
    for (int v = 0; v < fit.mask.stratum_values(); ++v)
      out["theta"][std::to_string(v)] = named_params(fit.theta[v], bins);
  } else {
    out["theta"] = named_params(fit.theta_hat(), bins);
  }
  out["loglik"] = fit.loglik;
  out["converged"] = fit.converged;
  out["iterations"] = fit.iterations;
  const std::vector<std::string> names = slot_names(fit.mask, bins);
  Json flags = Json::array();
  for (int slot : fit.boundary_flags) flags.push_back(names[slot]);
  out["boundary_flags"] = flags;
  return out;
}

Json bootstrap_to_json(const BootstrapResult &boots, const AgeBins &bins) {
  Json out;
  out["bins"] = bins_to_json(bins);
  out["seed"] = boots.seed;
  out["replicates_requested"] = boots.replicates_requested;
  out["replicates_used"] = boots.replicates.size();
  out["excluded"] = boots.excluded;
  const std::vector<std::string> names = slot_names(boots.mask, bins);
  Json point = Json::object();
  for (std::size_t p = 0; p < names.size(); ++p)
    point[names[p]] = boots.point_estimate[p];
  out["point"] = point;
  Json intervals = Json::object();
  for (std::size_t p = 0; p < names.size(); ++p) {
    Json iv;
    const bool degen = boots.degenerate[p];
    // a degenerate interval at 1 has no meaningful lower endpoint
    if (degen && boots.intervals[p][1] == 1.0 && boots.intervals[p][0] == 1.0)
      iv["lo"] = nullptr;
    else
      iv["lo"] = boots.intervals[p][0];
    iv["hi"] = boots.intervals[p][1];
    iv["degenerate"] = degen;
    intervals[names[p]] = iv;
  }
  out["intervals"] = intervals;
  Json reps = Json::array();
  for (const auto &rep : boots.replicates) reps.push_back(rep);
  out["replicates"] = reps;
  return out;
}

BootstrapResult bootstrap_from_json(const Json &j, const AgeBins &bins) try {
  BootstrapResult boots;
  const int pcount = parameter_count(bins.count());
  boots.mask = SharingMask::identity(pcount);
  boots.seed = j.at("seed").get<std::uint64_t>();
  boots.replicates_requested = j.at("replicates_requested").get<int>();
  boots.excluded = j.at("excluded").get<int>();
  const std::vector<std::string> names = parameter_names(bins);
  boots.point_estimate.resize(pcount);
  for (int p = 0; p < pcount; ++p)
    boots.point_estimate[p] = j.at("point").at(names[p]).get<double>();
  for (const auto &rep : j.at("replicates")) {
    std::vector<double> values = rep.get<std::vector<double>>();
    if (int(values.size()) != pcount)
      throw InputError("bootstrap replicate has the wrong length");
    boots.replicates.push_back(std::move(values));
  }
  if (boots.replicates.empty()) throw InputError("bootstrap file has no replicates");
  boots.intervals.resize(pcount);
  boots.degenerate.assign(pcount, false);
  for (int p = 0; p < pcount; ++p) {
    const Json &iv = j.at("intervals").at(names[p]);
    boots.degenerate[p] = iv.at("degenerate").get<bool>();
    boots.intervals[p][1] = iv.at("hi").get<double>();
    boots.intervals[p][0] =
        iv.at("lo").is_null() ? boots.intervals[p][1] : iv.at("lo").get<double>();
  }
  return boots;
} catch (const Json::exception &e) {
  throw InputError(std::string("bad bootstrap file: ") + e.what());
}

Json lrt_to_json(const LrtResult &res, const AgeBins &bins) {
  Json out;
  out["stratum"] = res.alt_fit.mask.stratum();
  const std::vector<std::string> base = parameter_names(bins);
  Json tied = Json::array();
  for (int p : res.alt_fit.mask.tied()) tied.push_back(base[p]);
  out["tied"] = tied;
  out["stat"] = res.stat;
  out["df"] = res.df;
  out["p_value"] = res.p_value;
  out["loglik_null"] = res.null_fit.loglik;
  out["loglik_alt"] = res.alt_fit.loglik;
  out["null"] = fit_to_json(res.null_fit, bins);
  out["alt"] = fit_to_json(res.alt_fit, bins);
  out["warnings"] = res.warnings;
  return out;
}

Json ingest_report_to_json(const IngestReport &report) {
  Json out;
  out["records"] = report.records;
  out["clipped_contacts"] = report.clipped_contacts;
  out["skipped_rows"] = report.skipped_rows;
  out["rejected_respondent_days"] = report.rejected_respondent_days;
  out["roster_conflicts"] = report.roster_conflicts;
  out["diagnostics"] = report.diagnostics;
  return out;
}

Json distribution_to_json(const NetworkDistribution &dist, const AgeBins &bins) {
  Json out;
  out["bins"] = bins_to_json(bins);
  Json members = Json::array();
  for (AgeCategory c : dist.members) members.push_back(bins.label(c));
  out["members"] = members;
  out["collapsed"] = dist.collapsed;
  out["min_prob"] = dist.min_prob;
  Json entries = Json::array();
  for (std::size_t e = 0; e < dist.entries.size(); ++e) {
    const DistributionEntry &entry = dist.entries[e];
    Json row;
    row["rank"] = e + 1;
    row["probability"] = entry.probability;
    row["class_size"] = entry.class_size;
    Json home = Json::array();
    for (int i = 0; i < entry.state.size(); ++i) home.push_back(entry.state.home(i) ? 1 : 0);
    row["home"] = home;
    Json edges = Json::array();
    for (int i = 0; i < entry.state.size(); ++i)
      for (int j2 = i + 1; j2 < entry.state.size(); ++j2)
        if (entry.state.edge(i, j2)) edges.push_back(Json::array({i, j2}));
    row["edges"] = edges;
    if (entry.interval)
      row["interval"] = Json::array({(*entry.interval)[0], (*entry.interval)[1]});
    entries.push_back(std::move(row));
  }
  out["entries"] = entries;
  Json rem;
  rem["probability"] = dist.remainder_probability;
  rem["classes"] = dist.remainder_classes;
  if (dist.remainder_interval)
    rem["interval"] =
        Json::array({(*dist.remainder_interval)[0], (*dist.remainder_interval)[1]});
  out["remainder"] = rem;
  out["total_probability"] = dist.total_probability;
  return out;
}

Json recovery_to_json(const RecoveryReport &report, const AgeBins &bins) {
  Json out;
  out["bins"] = bins_to_json(bins);
  out["replicates"] = report.replicates;
  out["non_converged"] = report.non_converged;
  out["truth"] = named_params(report.truth, bins);
  const std::vector<std::string> names = parameter_names(bins);
  Json mean = Json::object(), quant = Json::object();
  for (std::size_t p = 0; p < names.size(); ++p) {
    mean[names[p]] = report.mean_estimate[p];
    quant[names[p]] =
        Json::array({report.quantile_range[p][0], report.quantile_range[p][1]});
  }
  out["mean"] = mean;
  out["quantiles"] = quant;
  return out;
}

Json validity_to_json(const std::vector<ValidityRow> &rows, const AgeBins &bins) {
  Json out = Json::array();
  for (const ValidityRow &row : rows) {
    Json r;
    r["category"] = bins.label(row.category);
    r["respondents"] = row.respondents;
    r["estimate"] = row.estimate;
    r["estimate_interval"] =
        Json::array({row.estimate_interval[0], row.estimate_interval[1]});
    if (row.empty) {
      r["observed_share"] = nullptr;
    } else {
      r["observed_share"] = row.observed_share;
      r["share_interval"] =
          Json::array({row.share_interval[0], row.share_interval[1]});
    }
    r["flagged"] = row.flagged;
    out.push_back(std::move(r));
  }
  return out;
}

Json sim_design_to_json(const SimDesign &design) {
  Json out;
  out["bins"] = bins_to_json(design.bins);
  out["seed"] = design.seed;
  out["replicates"] = design.replicates;
  out["theta"] = named_params(design.theta, design.bins);
  Json cells = Json::array();
  for (const SimCell &cell : design.cells) {
    Json c;
    c["respondent"] = design.bins.label(cell.respondent);
    c["members"] = cell.members.counts;
    c["count"] = cell.count;
    cells.push_back(std::move(c));
  }
  out["cells"] = cells;
  return out;
}

SimDesign sim_design_from_json(const Json &j) try {
  SimDesign design;
  design.bins = bins_from_json(j.at("bins"));
  design.seed = j.at("seed").get<std::uint64_t>();
  design.replicates = j.at("replicates").get<int>();
  design.theta = named_params_from_json(j.at("theta"), design.bins);
  for (const auto &c : j.at("cells")) {
    SimCell cell;
    cell.respondent = design.bins.category_from_label(c.at("respondent").get<std::string>());
    cell.members.counts = c.at("members").get<std::vector<int>>();
    cell.count = c.at("count").get<long>();
    design.cells.push_back(std::move(cell));
  }
  design.validate();
  return design;
} catch (const Json::exception &e) {
  throw InputError(std::string("bad simulation design: ") + e.what());
}

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hhnet
