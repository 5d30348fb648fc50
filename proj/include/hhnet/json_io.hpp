#ifndef HHNET_JSON_IO_HPP
#define HHNET_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hhnet/bootstrap.hpp"
#include "hhnet/fit.hpp"
#include "hhnet/ingest.hpp"
#include "hhnet/model_selection.hpp"
#include "hhnet/network.hpp"
#include "hhnet/simulate.hpp"

namespace hhnet {

// insertion-ordered so serialized artifacts are stable
using Json = nlohmann::ordered_json;

Json bins_to_json(const AgeBins &bins);
AgeBins bins_from_json(const Json &j);

// {"home.0-5": 0.9, ...} in flat parameter order
Json named_params(const ParameterVector &theta, const AgeBins &bins);
ParameterVector named_params_from_json(const Json &j, const AgeBins &bins);

// full parameter file: {"bins": [...], "theta": {...}}
Json params_file_to_json(const ParameterVector &theta, const AgeBins &bins);
ParameterVector params_file_from_json(const Json &j, AgeBins *bins_out = nullptr);

// names of the free slots of a mask; split slots carry a [stratum=value] suffix
std::vector<std::string> slot_names(const SharingMask &mask, const AgeBins &bins);

Json fit_to_json(const FitResult &fit, const AgeBins &bins);
Json bootstrap_to_json(const BootstrapResult &boots, const AgeBins &bins);
BootstrapResult bootstrap_from_json(const Json &j, const AgeBins &bins);
Json lrt_to_json(const LrtResult &res, const AgeBins &bins);
Json ingest_report_to_json(const IngestReport &report);
Json distribution_to_json(const NetworkDistribution &dist, const AgeBins &bins);
Json recovery_to_json(const RecoveryReport &report, const AgeBins &bins);
Json validity_to_json(const std::vector<ValidityRow> &rows, const AgeBins &bins);

Json sim_design_to_json(const SimDesign &design);
SimDesign sim_design_from_json(const Json &j);

Json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const Json &j);

}  // namespace hhnet

#endif
