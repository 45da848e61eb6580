#ifndef SEQCPD_JSON_IO_HPP
#define SEQCPD_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "seqcpd/experiment.hpp"
#include "seqcpd/monitor.hpp"
#include "seqcpd/multiplier.hpp"
#include "seqcpd/scenario.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd {

using json = nlohmann::json;

json to_json(const MonitorConfig& cfg);
MonitorConfig monitor_config_from_json(const json& j);

json to_json(const MultiplierConfig& mult);
MultiplierConfig multiplier_from_json(const json& j);

/// Applies the fields present in j on top of base (per-field overrides).
MonitorConfig merge_config(MonitorConfig base, const json& j);

/// Threshold function plus enough provenance to replay its estimation.
struct ThresholdArtifact {
  ThresholdFunction fn;
  std::string mode;  // "mc" or "bootstrap"
  MonitorConfig cfg;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
  std::optional<MultiplierConfig> multiplier;  // bootstrap provenance
};

json to_json(const ThresholdArtifact& art);
ThresholdArtifact threshold_artifact_from_json(const json& j);

json to_json(const MonitorReport& report);

json to_json(const ExperimentResult& res);

ModelSpec model_from_json(const json& j);
json to_json(const ModelSpec& model);

Scenario scenario_from_json(const json& j);
json to_json(const Scenario& scn);

json load_json_file(const std::string& path);
void save_json_file(const json& j, const std::string& path);

}  // namespace seqcpd

#endif  // SEQCPD_JSON_IO_HPP
