#include "seqcpd/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <type_traits>

namespace seqcpd {

namespace {

std::string status_name(MonitorStatus s) {
  switch (s) {
    case MonitorStatus::Running: return "running";
    case MonitorStatus::Alarmed: return "alarmed";
    case MonitorStatus::EndedNoAlarm: return "ended_no_alarm";
  }
  throw std::logic_error("unknown status");
}

std::string kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::Parzen: return "parzen";
  }
  throw std::logic_error("unknown kernel");
}

KernelKind kernel_from_name(const std::string& name) {
  if (name == "parzen") return KernelKind::Parzen;
  throw std::invalid_argument("unknown kernel: " + name);
}

std::string bandwidth_rule_name(BandwidthRule r) {
  switch (r) {
    case BandwidthRule::Fixed: return "fixed";
    case BandwidthRule::PowerRule: return "power";
  }
  throw std::logic_error("unknown bandwidth rule");
}

BandwidthRule bandwidth_rule_from_name(const std::string& name) {
  if (name == "fixed") return BandwidthRule::Fixed;
  if (name == "power") return BandwidthRule::PowerRule;
  throw std::invalid_argument("unknown bandwidth rule: " + name);
}

}  // namespace

json to_json(const MultiplierConfig& mult) {
  return json{{"replicates", mult.B},
              {"bandwidth_rule", bandwidth_rule_name(mult.ell_rule)},
              {"bandwidth", mult.ell},
              {"kernel", kernel_name(mult.kernel)},
              {"seed", mult.seed}};
}

MultiplierConfig multiplier_from_json(const json& j) {
  MultiplierConfig mult;
  if (j.contains("replicates")) mult.B = j.at("replicates").get<std::size_t>();
  if (j.contains("bandwidth_rule"))
    mult.ell_rule = bandwidth_rule_from_name(j.at("bandwidth_rule").get<std::string>());
  if (j.contains("bandwidth")) mult.ell = j.at("bandwidth").get<std::size_t>();
  if (j.contains("kernel"))
    mult.kernel = kernel_from_name(j.at("kernel").get<std::string>());
  if (j.contains("seed")) mult.seed = j.at("seed").get<std::uint64_t>();
  return mult;
}

json to_json(const MonitorConfig& cfg) {
  return json{{"m", cfg.m},
              {"n", cfg.n},
              {"alpha", cfg.alpha},
              {"steps", cfg.p},
              {"detector", to_string(cfg.detector)},
              {"gamma", cfg.gamma},
              {"delta", cfg.delta},
              {"dim", cfg.dim}};
}

MonitorConfig merge_config(MonitorConfig base, const json& j) {
  if (j.contains("m")) base.m = j.at("m").get<std::size_t>();
  if (j.contains("n")) base.n = j.at("n").get<std::size_t>();
  if (j.contains("alpha")) base.alpha = j.at("alpha").get<double>();
  if (j.contains("steps")) base.p = j.at("steps").get<std::size_t>();
  if (j.contains("detector"))
    base.detector = detector_kind_from_string(j.at("detector").get<std::string>());
  if (j.contains("gamma")) base.gamma = j.at("gamma").get<double>();
  if (j.contains("delta")) base.delta = j.at("delta").get<double>();
  if (j.contains("dim")) base.dim = j.at("dim").get<std::size_t>();
  return base;
}

MonitorConfig monitor_config_from_json(const json& j) {
  return merge_config(MonitorConfig{}, j);
}

json to_json(const ThresholdArtifact& art) {
  json j{{"mode", art.mode},
         {"config", to_json(art.cfg)},
         {"seed", art.seed},
         {"replicates", art.replicates},
         {"order", art.fn.order},
         {"boundaries", art.fn.boundaries},
         {"levels", art.fn.levels}};
  if (art.multiplier) j["multiplier"] = to_json(*art.multiplier);
  return j;
}

ThresholdArtifact threshold_artifact_from_json(const json& j) {
  ThresholdArtifact art;
  art.mode = j.at("mode").get<std::string>();
  if (art.mode != "mc" && art.mode != "bootstrap")
    throw std::invalid_argument("unknown threshold mode: " + art.mode);
  art.cfg = monitor_config_from_json(j.at("config"));
  art.seed = j.at("seed").get<std::uint64_t>();
  art.replicates = j.at("replicates").get<std::size_t>();
  art.fn.order = j.at("order").get<double>();
  art.fn.boundaries = j.at("boundaries").get<std::vector<std::size_t>>();
  art.fn.levels = j.at("levels").get<std::vector<double>>();
  if (j.contains("multiplier"))
    art.multiplier = multiplier_from_json(j.at("multiplier"));
  art.fn.validate();
  art.cfg.validate();
  return art;
}

json to_json(const MonitorReport& report) {
  json j{{"status", status_name(report.status)},
         {"detector_path", report.detector_path},
         {"threshold_trace", report.threshold_trace}};
  if (report.alarm_index) j["alarm_index"] = *report.alarm_index;
  if (report.changepoint) j["changepoint"] = *report.changepoint;
  return j;
}

json to_json(const ExperimentResult& res) {
  json j{{"rejection_pct", res.rejection_pct},
         {"trials", res.n_trials},
         {"false_alarms", res.n_false_alarms},
         {"missed", res.n_missed},
         {"alarm_histogram", res.alarm_histogram}};
  if (std::isfinite(res.mean_delay)) j["mean_delay"] = res.mean_delay;
  return j;
}

ModelSpec model_from_json(const json& j) {
  const std::string name = j.at("model").get<std::string>();
  if (name == "uniform") {
    IidUniform mdl;
    if (j.contains("dim")) mdl.dim = j.at("dim").get<std::size_t>();
    return mdl;
  }
  if (name == "normal") {
    IidNormal mdl;
    if (j.contains("mean")) mdl.mean = j.at("mean").get<double>();
    if (j.contains("var")) mdl.var = j.at("var").get<double>();
    if (j.contains("dim")) mdl.dim = j.at("dim").get<std::size_t>();
    return mdl;
  }
  if (name == "gamma") {
    IidGamma mdl;
    if (j.contains("shape")) mdl.shape = j.at("shape").get<double>();
    if (j.contains("rate")) mdl.rate = j.at("rate").get<double>();
    return mdl;
  }
  if (name == "ar1") {
    Ar1 mdl;
    if (j.contains("beta")) mdl.beta = j.at("beta").get<double>();
    return mdl;
  }
  if (name == "garch") {
    Garch11 mdl;
    if (j.contains("omega")) mdl.omega = j.at("omega").get<double>();
    if (j.contains("beta")) mdl.beta = j.at("beta").get<double>();
    if (j.contains("alpha")) mdl.alpha = j.at("alpha").get<double>();
    return mdl;
  }
  if (name == "normal_copula") {
    NormalCopula mdl;
    if (j.contains("tau")) mdl.tau = j.at("tau").get<double>();
    if (j.contains("dim")) mdl.dim = j.at("dim").get<std::size_t>();
    return mdl;
  }
  throw std::invalid_argument("unknown model: " + name);
}

json to_json(const ModelSpec& model) {
  return std::visit(
      [](const auto& mdl) -> json {
        using M = std::decay_t<decltype(mdl)>;
        if constexpr (std::is_same_v<M, IidUniform>)
          return json{{"model", "uniform"}, {"dim", mdl.dim}};
        else if constexpr (std::is_same_v<M, IidNormal>)
          return json{{"model", "normal"},
                      {"mean", mdl.mean},
                      {"var", mdl.var},
                      {"dim", mdl.dim}};
        else if constexpr (std::is_same_v<M, IidGamma>)
          return json{{"model", "gamma"}, {"shape", mdl.shape}, {"rate", mdl.rate}};
        else if constexpr (std::is_same_v<M, Ar1>)
          return json{{"model", "ar1"}, {"beta", mdl.beta}};
        else if constexpr (std::is_same_v<M, Garch11>)
          return json{{"model", "garch"},
                      {"omega", mdl.omega},
                      {"beta", mdl.beta},
                      {"alpha", mdl.alpha}};
        else
          return json{{"model", "normal_copula"}, {"tau", mdl.tau}, {"dim", mdl.dim}};
      },
      model);
}

Scenario scenario_from_json(const json& j) {
  Scenario scn;
  scn.null_model = model_from_json(j.at("null"));
  scn.m = j.at("m").get<std::size_t>();
  scn.n = j.at("n").get<std::size_t>();
  if (j.contains("change")) {
    const json& c = j.at("change");
    scn.change = Scenario::Change{c.at("at").get<std::size_t>(),
                                  model_from_json(c.at("post"))};
  }
  scn.validate();
  return scn;
}

json to_json(const Scenario& scn) {
  json j{{"null", to_json(scn.null_model)}, {"m", scn.m}, {"n", scn.n}};
  if (scn.change)
    j["change"] = json{{"at", scn.change->at},
                       {"post", to_json(scn.change->post_model)}};
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void save_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace seqcpd
