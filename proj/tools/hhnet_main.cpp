#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhnet/csv.hpp"
#include "hhnet/errors.hpp"
#include "hhnet/json_io.hpp"

namespace {

using hhnet::Json;

constexpr const char *tool_version = "0.1.0";

int g_threads = 0;  // resolved once in main

// flag wins, then the environment, then auto-detect
int resolve_thread_option(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char *env = std::getenv("HHNET_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception &) {
      throw hhnet::InputError("HHNET_THREADS is not a positive integer");
    }
  }
  return 0;
}

hhnet::AgeBins bins_from_option(const std::vector<int> &boundaries) {
  if (boundaries.empty()) return hhnet::AgeBins();
  return hhnet::AgeBins(boundaries);
}

std::vector<hhnet::RespondentRecord> load_records(const std::string &path,
                                                  const hhnet::AgeBins &bins) {
  std::ifstream in(path);
  if (!in) throw hhnet::InputError("cannot open " + path);
  return hhnet::read_records_csv(in, path, bins);
}

void write_manifest(const std::string &out_path, const std::string &command,
                    const std::vector<std::string> &argv, const Json &config) {
  Json m;
  m["tool"] = "hhnet";
  m["version"] = tool_version;
  m["command"] = command;
  m["argv"] = argv;
  m["config"] = config;
  hhnet::save_json_file(out_path + ".manifest.json", m);
}

std::vector<std::string> capture_argv(int argc, char **argv) {
  return std::vector<std::string>(argv, argv + argc);
}

struct CommonOpts {
  std::vector<int> bins;
  std::string records;
  std::string out;
};

void add_bins_option(CLI::App *cmd, std::vector<int> &bins) {
  cmd->add_option("--bins", bins,
                  "age bin boundaries, e.g. 6 12 19 36 (default: 6 12 19 36)")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"within-household contact network estimation"};
  app.require_subcommand(1);
  const std::vector<std::string> raw_argv = capture_argv(argc, argv);

  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker threads (default: all cores)");

  // ingest
  auto *ingest = app.add_subcommand("ingest", "diary contact file to aggregated records");
  std::string ingest_diary, ingest_out, ingest_report, ingest_day = "all";
  std::vector<int> ingest_bins;
  ingest->add_option("--diary", ingest_diary, "diary contact CSV")->required();
  ingest->add_option("--out", ingest_out, "aggregated records CSV")->required();
  ingest->add_option("--report", ingest_report, "ingestion report JSON")->required();
  ingest->add_option("--day", ingest_day, "which diary day per respondent: all, first, second");
  add_bins_option(ingest, ingest_bins);

  // fit
  auto *fit = app.add_subcommand("fit", "maximum-likelihood fit");
  std::string fit_records, fit_out, fit_init;
  std::vector<int> fit_bins;
  hhnet::FitOptions fit_opts;
  bool fit_timings = false;
  fit->add_option("--records", fit_records, "aggregated records CSV")->required();
  fit->add_option("--out", fit_out, "fit result JSON")->required();
  fit->add_option("--init", fit_init, "starting parameters JSON");
  fit->add_option("--max-iter", fit_opts.max_iterations, "iteration cap");
  fit->add_option("--grad-tol", fit_opts.grad_tol, "gradient convergence tolerance");
  fit->add_flag("--timings", fit_timings, "include wall-clock timings (breaks rerun byte-identity)");
  add_bins_option(fit, fit_bins);

  // bootstrap
  auto *boot = app.add_subcommand("bootstrap", "percentile intervals by resampling");
  std::string boot_records, boot_out, boot_init;
  std::vector<int> boot_bins;
  int boot_reps = 1000;
  std::uint64_t boot_seed = 1;
  hhnet::FitOptions boot_opts;
  boot->add_option("--records", boot_records, "aggregated records CSV")->required();
  boot->add_option("--out", boot_out, "bootstrap result JSON")->required();
  boot->add_option("--replicates", boot_reps, "bootstrap replicates (default 1000)");
  boot->add_option("--seed", boot_seed, "random seed (default 1)");
  boot->add_option("--init", boot_init, "starting parameters JSON");
  add_bins_option(boot, boot_bins);

  // lrt
  auto *lrt_cmd = app.add_subcommand("lrt", "likelihood-ratio test across a stratum");
  std::string lrt_records, lrt_out, lrt_stratum;
  std::vector<std::string> lrt_tied;
  std::vector<int> lrt_bins;
  hhnet::FitOptions lrt_opts;
  lrt_cmd->add_option("--records", lrt_records, "aggregated records CSV")->required();
  lrt_cmd->add_option("--out", lrt_out, "test result JSON")->required();
  lrt_cmd->add_option("--stratum", lrt_stratum, "weekend, holiday or large_household")
      ->required();
  lrt_cmd->add_option("--tie", lrt_tied,
                      "parameter kept shared across the stratum, e.g. contact.0-5x0-5 "
                      "(repeatable)");
  add_bins_option(lrt_cmd, lrt_bins);

  // enumerate
  auto *enu = app.add_subcommand("enumerate", "exact network distribution for a household");
  std::string enu_members, enu_params, enu_out, enu_dot, enu_csv, enu_boots;
  bool enu_no_collapse = false;
  double enu_min_prob = 0.02;
  std::uint64_t enu_max_states = hhnet::default_state_budget;
  enu->add_option("--members", enu_members,
                  "household members as age labels, e.g. 0-5,0-5,19-35,19-35")
      ->required();
  enu->add_option("--params", enu_params, "parameters JSON (fit output works)")->required();
  enu->add_option("--out", enu_out, "distribution JSON")->required();
  enu->add_option("--dot", enu_dot, "graphviz output path");
  enu->add_option("--csv", enu_csv, "tabular output path");
  enu->add_option("--bootstrap", enu_boots, "bootstrap JSON to attach intervals");
  enu->add_flag("--no-collapse", enu_no_collapse, "keep members distinguishable");
  enu->add_option("--min-prob", enu_min_prob, "fold entries below this into (other)");
  enu->add_option("--max-states", enu_max_states, "state-count budget");

  // simulate
  auto *sim = app.add_subcommand("simulate", "draw datasets or run a recovery study");
  std::string sim_design_path, sim_out;
  int sim_replicate = 0;
  bool sim_recovery = false;
  sim->add_option("--design", sim_design_path, "simulation design JSON")->required();
  sim->add_option("--out", sim_out, "output path")->required();
  sim->add_option("--replicate", sim_replicate, "replicate index for dataset output");
  sim->add_flag("--recovery", sim_recovery, "fit every replicate and report recovery");

  // validate
  auto *val = app.add_subcommand("validate", "fitted at-home probabilities vs observed shares");
  std::string val_records, val_boots, val_out;
  std::vector<int> val_bins;
  val->add_option("--records", val_records, "aggregated records CSV")->required();
  val->add_option("--bootstrap", val_boots, "bootstrap result JSON")->required();
  val->add_option("--out", val_out, "validity report JSON")->required();
  add_bins_option(val, val_bins);

  CLI11_PARSE(app, argc, argv);

  try {
    g_threads = resolve_thread_option(threads_flag);

    if (*ingest) {
      hhnet::AgeBins bins = bins_from_option(ingest_bins);
      std::ifstream in(ingest_diary);
      if (!in) throw hhnet::InputError("cannot open " + ingest_diary);
      hhnet::IngestReport report;
      std::vector<hhnet::RespondentRecord> records = hhnet::ingest_diary(
          in, ingest_diary, bins, hhnet::day_filter_from_string(ingest_day), report);
      std::ofstream out(ingest_out);
      if (!out) throw hhnet::InputError("cannot write " + ingest_out);
      hhnet::write_records_csv(out, records);
      hhnet::save_json_file(ingest_report, hhnet::ingest_report_to_json(report));
      Json config;
      config["diary"] = ingest_diary;
      config["out"] = ingest_out;
      config["report"] = ingest_report;
      config["day"] = ingest_day;
      config["bins"] = hhnet::bins_to_json(bins);
      write_manifest(ingest_out, "ingest", raw_argv, config);
      std::cerr << "ingested " << report.records << " records ("
                << report.clipped_contacts << " clipped contacts, "
                << report.skipped_rows << " skipped rows)\n";
      return 0;
    }

    if (*fit) {
      hhnet::AgeBins bins = bins_from_option(fit_bins);
      std::vector<hhnet::RespondentRecord> records = load_records(fit_records, bins);
      hhnet::ParameterVector init = hhnet::default_init(bins.count());
      if (!fit_init.empty())
        init = hhnet::params_file_from_json(hhnet::load_json_file(fit_init));
      const auto t0 = std::chrono::steady_clock::now();
      hhnet::FitResult res = hhnet::fit_mle(
          records, init,
          hhnet::SharingMask::identity(hhnet::parameter_count(bins.count())), fit_opts);
      const auto t1 = std::chrono::steady_clock::now();
      Json out = hhnet::fit_to_json(res, bins);
      if (fit_timings)
        out["timings"] = {{"fit_seconds", std::chrono::duration<double>(t1 - t0).count()}};
      hhnet::save_json_file(fit_out, out);
      Json config;
      config["records"] = fit_records;
      config["out"] = fit_out;
      config["init"] = fit_init;
      config["bins"] = hhnet::bins_to_json(bins);
      config["max_iter"] = fit_opts.max_iterations;
      config["grad_tol"] = fit_opts.grad_tol;
      write_manifest(fit_out, "fit", raw_argv, config);
      if (!res.converged) {
        std::cerr << "fit did not converge within the iteration cap\n";
        return 3;
      }
      return 0;
    }

    if (*boot) {
      hhnet::AgeBins bins = bins_from_option(boot_bins);
      std::vector<hhnet::RespondentRecord> records = load_records(boot_records, bins);
      hhnet::FitResult base;
      const hhnet::FitResult *base_ptr = nullptr;
      if (!boot_init.empty()) {
        hhnet::ParameterVector init =
            hhnet::params_file_from_json(hhnet::load_json_file(boot_init));
        base = hhnet::fit_mle(
            records, init,
            hhnet::SharingMask::identity(hhnet::parameter_count(bins.count())),
            boot_opts);
        base_ptr = &base;
      }
      hhnet::BootstrapResult res = hhnet::bootstrap(records, boot_reps, boot_seed,
                                                    boot_opts, g_threads, base_ptr);
      hhnet::save_json_file(boot_out, hhnet::bootstrap_to_json(res, bins));
      Json config;
      config["records"] = boot_records;
      config["out"] = boot_out;
      config["replicates"] = boot_reps;
      config["seed"] = boot_seed;
      config["init"] = boot_init;
      config["bins"] = hhnet::bins_to_json(bins);
      config["threads"] = g_threads;
      write_manifest(boot_out, "bootstrap", raw_argv, config);
      if (res.excluded > 0)
        std::cerr << res.excluded << " replicates excluded for non-convergence\n";
      return 0;
    }

    if (*lrt_cmd) {
      hhnet::AgeBins bins = bins_from_option(lrt_bins);
      std::vector<hhnet::RespondentRecord> records = load_records(lrt_records, bins);
      std::set<int> tied;
      for (const std::string &name : lrt_tied)
        tied.insert(hhnet::parameter_index_from_name(name, bins));
      hhnet::LrtResult res = hhnet::lrt(records, lrt_stratum, tied, lrt_opts);
      hhnet::save_json_file(lrt_out, hhnet::lrt_to_json(res, bins));
      Json config;
      config["records"] = lrt_records;
      config["out"] = lrt_out;
      config["stratum"] = lrt_stratum;
      config["tie"] = lrt_tied;
      config["bins"] = hhnet::bins_to_json(bins);
      write_manifest(lrt_out, "lrt", raw_argv, config);
      for (const std::string &w : res.warnings) std::cerr << "warning: " << w << "\n";
      if (!res.null_fit.converged || !res.alt_fit.converged) return 3;
      return 0;
    }

    if (*enu) {
      hhnet::AgeBins bins;
      hhnet::ParameterVector theta =
          hhnet::params_file_from_json(hhnet::load_json_file(enu_params), &bins);
      std::vector<hhnet::AgeCategory> members;
      for (const std::string &label : hhnet::split_list(enu_members, ','))
        members.push_back(bins.category_from_label(label));
      hhnet::NetworkDistribution dist;
      if (!enu_boots.empty()) {
        hhnet::BootstrapResult boots =
            hhnet::bootstrap_from_json(hhnet::load_json_file(enu_boots), bins);
        dist = hhnet::distribution_intervals(members, boots, !enu_no_collapse,
                                             enu_min_prob, enu_max_states);
      } else {
        dist = hhnet::enumerate_distribution(members, theta, !enu_no_collapse,
                                             enu_min_prob, enu_max_states);
      }
      hhnet::save_json_file(enu_out, hhnet::distribution_to_json(dist, bins));
      if (!enu_dot.empty()) {
        std::ofstream dot(enu_dot);
        if (!dot) throw hhnet::InputError("cannot write " + enu_dot);
        dot << hhnet::distribution_to_dot(dist, bins);
      }
      if (!enu_csv.empty()) {
        std::ofstream csv(enu_csv);
        if (!csv) throw hhnet::InputError("cannot write " + enu_csv);
        hhnet::write_distribution_csv(csv, dist, bins);
      }
      Json config;
      config["members"] = enu_members;
      config["params"] = enu_params;
      config["out"] = enu_out;
      config["dot"] = enu_dot;
      config["csv"] = enu_csv;
      config["bootstrap"] = enu_boots;
      config["collapse"] = !enu_no_collapse;
      config["min_prob"] = enu_min_prob;
      config["max_states"] = enu_max_states;
      write_manifest(enu_out, "enumerate", raw_argv, config);
      return 0;
    }

    if (*sim) {
      hhnet::SimDesign design =
          hhnet::sim_design_from_json(hhnet::load_json_file(sim_design_path));
      Json config;
      config["design"] = sim_design_path;
      config["out"] = sim_out;
      config["recovery"] = sim_recovery;
      config["replicate"] = sim_replicate;
      config["threads"] = g_threads;
      if (sim_recovery) {
        hhnet::RecoveryReport report = hhnet::recovery_study(design, {}, g_threads);
        hhnet::save_json_file(sim_out, hhnet::recovery_to_json(report, design.bins));
        write_manifest(sim_out, "simulate", raw_argv, config);
        if (report.non_converged > 0) {
          std::cerr << report.non_converged << " replicates did not converge\n";
          return 3;
        }
      } else {
        if (sim_replicate < 0 || sim_replicate >= design.replicates)
          throw hhnet::InputError("replicate index outside the design");
        std::vector<hhnet::RespondentRecord> data =
            hhnet::simulate_dataset(design, sim_replicate);
        std::ofstream out(sim_out);
        if (!out) throw hhnet::InputError("cannot write " + sim_out);
        hhnet::write_records_csv(out, data);
        write_manifest(sim_out, "simulate", raw_argv, config);
      }
      return 0;
    }

    if (*val) {
      hhnet::AgeBins bins = bins_from_option(val_bins);
      std::vector<hhnet::RespondentRecord> records = load_records(val_records, bins);
      hhnet::BootstrapResult boots =
          hhnet::bootstrap_from_json(hhnet::load_json_file(val_boots), bins);
      hhnet::FitResult point;
      point.mask = boots.mask;
      point.free_estimates = boots.point_estimate;
      point.free_estimates_raw = boots.point_estimate;
      hhnet::ParameterVector theta(bins.count());
      for (int p = 0; p < boots.mask.param_count(); ++p)
        theta.set(p, boots.point_estimate[p]);
      point.theta.push_back(theta);
      std::vector<hhnet::ValidityRow> rows = hhnet::validity_check(records, point, boots);
      hhnet::save_json_file(val_out, hhnet::validity_to_json(rows, bins));
      Json config;
      config["records"] = val_records;
      config["bootstrap"] = val_boots;
      config["out"] = val_out;
      config["bins"] = hhnet::bins_to_json(bins);
      write_manifest(val_out, "validate", raw_argv, config);
      for (const hhnet::ValidityRow &row : rows)
        if (row.flagged)
          std::cerr << "warning: category " << bins.label(row.category)
                    << " observed share outside the fitted interval\n";
      return 0;
    }
  } catch (const hhnet::InputError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hhnet::ResourceError &e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
