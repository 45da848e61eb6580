// Command line front end: threshold estimation, stream monitoring,
// scenario simulation and level/power experiments.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqcpd/csv.hpp"
#include "seqcpd/experiment.hpp"
#include "seqcpd/json_io.hpp"
#include "seqcpd/monitor.hpp"
#include "seqcpd/multiplier.hpp"
#include "seqcpd/scenario.hpp"
#include "seqcpd/threshold.hpp"

namespace {

using seqcpd::json;

struct ConfigCli {
  std::string config_path;
  json overrides = json::object();
};

// --config <json> plus per-field overrides; flags win over the file.
void add_config_options(CLI::App* app, ConfigCli* cc) {
  app->add_option("--config", cc->config_path, "monitor config JSON file");
  auto capture = [cc](const std::string& key) {
    return [cc, key](const std::string& v) { cc->overrides[key] = json::parse(v); };
  };
  auto capture_str = [cc](const std::string& key) {
    return [cc, key](const std::string& v) { cc->overrides[key] = v; };
  };
  app->add_option_function<std::string>("--m", capture("m"), "learning-sample size");
  app->add_option_function<std::string>("--n", capture("n"), "monitoring horizon");
  app->add_option_function<std::string>("--alpha", capture("alpha"),
                                        "false-alarm probability");
  app->add_option_function<std::string>("--steps", capture("steps"),
                                        "threshold steps p");
  app->add_option_function<std::string>("--detector", capture_str("detector"),
                                        "detector kind (R, S, T, P or Q)");
  app->add_option_function<std::string>("--gamma", capture("gamma"),
                                        "weight exponent");
  app->add_option_function<std::string>("--delta", capture("delta"),
                                        "weight floor");
  app->add_option_function<std::string>("--dim", capture("dim"),
                                        "observation dimension");
}

seqcpd::MonitorConfig resolve_config(const ConfigCli& cc) {
  seqcpd::MonitorConfig cfg;
  if (!cc.config_path.empty())
    cfg = seqcpd::monitor_config_from_json(seqcpd::load_json_file(cc.config_path));
  cfg = seqcpd::merge_config(cfg, cc.overrides);
  cfg.validate();
  return cfg;
}

int cmd_threshold(const ConfigCli& cc, const std::string& mode,
                  const std::string& learning_path, std::size_t replicates,
                  std::uint64_t seed, std::size_t bandwidth,
                  const std::string& out_path) {
  seqcpd::MonitorConfig cfg = resolve_config(cc);
  seqcpd::ThresholdArtifact art;
  art.mode = mode;
  art.cfg = cfg;
  art.seed = seed;
  if (mode == "mc") {
    art.replicates = replicates > 0 ? replicates : 100000;
    art.fn = seqcpd::mc_threshold(cfg, art.replicates, seed);
  } else if (mode == "bootstrap") {
    if (learning_path.empty())
      throw std::invalid_argument("--mode bootstrap requires --learning");
    const seqcpd::ObservationMatrix learning = seqcpd::read_csv(learning_path);
    seqcpd::MultiplierConfig mult;
    mult.B = replicates > 0 ? replicates : 2000;
    mult.seed = seed;
    if (bandwidth > 0) {
      mult.ell_rule = seqcpd::BandwidthRule::Fixed;
      mult.ell = bandwidth;
    }
    art.replicates = mult.B;
    art.multiplier = mult;
    art.fn = seqcpd::bootstrap_threshold(learning, cfg, mult);
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  const json j = seqcpd::to_json(art);
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    seqcpd::save_json_file(j, out_path);
  return 0;
}

int cmd_monitor(const std::string& learning_path, const std::string& stream_path,
                const std::string& threshold_path, const std::string& out_path) {
  const seqcpd::ThresholdArtifact art = seqcpd::threshold_artifact_from_json(
      seqcpd::load_json_file(threshold_path));
  const seqcpd::ObservationMatrix learning = seqcpd::read_csv(learning_path);
  const seqcpd::ObservationMatrix stream = seqcpd::read_csv(stream_path);

  seqcpd::MonitorState monitor(learning, art.fn, art.cfg);
  const seqcpd::MonitorReport report = monitor.run(stream);

  json j = seqcpd::to_json(report);
  j["config"] = seqcpd::to_json(art.cfg);
  j["threshold"] = seqcpd::to_json(art);
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    seqcpd::save_json_file(j, out_path);

  if (report.status == seqcpd::MonitorStatus::Alarmed) {
    std::cerr << "alarm at observation " << *report.alarm_index
              << ", estimated change point " << *report.changepoint << '\n';
    return 10;
  }
  std::cerr << "no alarm over " << stream.rows() << " observations\n";
  return 0;
}

int cmd_simulate(const std::string& scenario_path, std::uint64_t seed,
                 const std::string& out_path) {
  const seqcpd::Scenario scn =
      seqcpd::scenario_from_json(seqcpd::load_json_file(scenario_path));
  const seqcpd::ObservationMatrix data = seqcpd::generate(scn, seed);
  seqcpd::write_csv(data, out_path);
  std::cerr << "wrote " << data.rows() << " x " << data.cols() << " to "
            << out_path << '\n';
  return 0;
}

seqcpd::ThresholdMode mode_from_name(const std::string& name) {
  if (name == "mc") return seqcpd::ThresholdMode::MonteCarlo;
  if (name == "bootstrap") return seqcpd::ThresholdMode::Bootstrap;
  throw std::invalid_argument("unknown mode: " + name);
}

// An experiment spec holds base {scenario, config, mode, trials,
// replicates, seed} plus an optional "grid" of cells, each overriding
// config fields and/or replacing the scenario.
int cmd_experiment(const std::string& spec_path, const std::string& out_path,
                   const std::string& csv_path) {
  const json spec = seqcpd::load_json_file(spec_path);
  seqcpd::ExperimentConfig base;
  base.scenario = seqcpd::scenario_from_json(spec.at("scenario"));
  base.cfg = seqcpd::monitor_config_from_json(spec.at("config"));
  if (spec.contains("mode"))
    base.mode = mode_from_name(spec.at("mode").get<std::string>());
  if (spec.contains("trials")) base.trials = spec.at("trials").get<std::size_t>();
  if (spec.contains("replicates"))
    base.replicates = spec.at("replicates").get<std::size_t>();
  if (spec.contains("seed")) base.seed = spec.at("seed").get<std::uint64_t>();
  if (spec.contains("multiplier"))
    base.mult = seqcpd::multiplier_from_json(spec.at("multiplier"));

  std::vector<json> cells;
  if (spec.contains("grid"))
    cells = spec.at("grid").get<std::vector<json>>();
  else
    cells.push_back(json::object());

  json rows = json::array();
  std::ostringstream csv;
  csv << "name,scenario,m,n,detector,gamma,steps,mode,trials,"
         "rejection_pct,mean_delay\n";
  for (const json& cell : cells) {
    seqcpd::ExperimentConfig ec = base;
    if (cell.contains("config"))
      ec.cfg = seqcpd::merge_config(ec.cfg, cell.at("config"));
    if (cell.contains("scenario"))
      ec.scenario = seqcpd::scenario_from_json(cell.at("scenario"));
    if (cell.contains("seed")) ec.seed = cell.at("seed").get<std::uint64_t>();
    ec.cfg.m = ec.scenario.m;
    ec.cfg.n = ec.scenario.n;
    ec.cfg.validate();
    const std::string name =
        cell.contains("name") ? cell.at("name").get<std::string>() : "";

    const seqcpd::ExperimentResult res = ec.scenario.change
                                             ? seqcpd::run_power_experiment(ec)
                                             : seqcpd::run_level_experiment(ec);
    json row{{"name", name},
             {"scenario", seqcpd::to_json(ec.scenario)},
             {"config", seqcpd::to_json(ec.cfg)},
             {"mode", ec.mode == seqcpd::ThresholdMode::MonteCarlo ? "mc" : "bootstrap"},
             {"result", seqcpd::to_json(res)}};
    rows.push_back(row);

    csv << name << ',' << seqcpd::to_json(ec.scenario.null_model)["model"]
               .get<std::string>()
        << ',' << ec.cfg.m << ',' << ec.cfg.n << ','
        << seqcpd::to_string(ec.cfg.detector) << ',' << ec.cfg.gamma << ','
        << ec.cfg.p << ','
        << (ec.mode == seqcpd::ThresholdMode::MonteCarlo ? "mc" : "bootstrap")
        << ',' << res.n_trials << ',' << res.rejection_pct << ',';
    if (std::isfinite(res.mean_delay)) csv << res.mean_delay;
    csv << '\n';
    std::cerr << (name.empty() ? std::string("cell") : name) << ": "
              << res.rejection_pct << "% rejection\n";
  }

  if (out_path.empty())
    std::cout << rows.dump(2) << '\n';
  else
    seqcpd::save_json_file(rows, out_path);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonparametric sequential change-point detection"};
  app.require_subcommand(1);

  // threshold
  ConfigCli tcc;
  std::string t_mode = "mc", t_learning, t_out;
  std::size_t t_replicates = 0, t_bandwidth = 0;
  std::uint64_t t_seed = 0;
  CLI::App* thr = app.add_subcommand("threshold", "estimate a threshold function");
  add_config_options(thr, &tcc);
  thr->add_option("--mode", t_mode, "mc or bootstrap")
      ->check(CLI::IsMember({"mc", "bootstrap"}));
  thr->add_option("--learning", t_learning, "learning sample CSV (bootstrap)");
  thr->add_option("--replicates", t_replicates, "M or B (0 = default)");
  thr->add_option("--seed", t_seed, "random seed");
  thr->add_option("--bandwidth", t_bandwidth,
                  "fixed multiplier bandwidth (0 = automatic)");
  thr->add_option("--out", t_out, "output JSON path (default: stdout)");

  // monitor
  std::string m_learning, m_stream, m_threshold, m_out;
  CLI::App* mon = app.add_subcommand("monitor", "monitor a stream for a change");
  mon->add_option("--learning", m_learning, "learning sample CSV")->required();
  mon->add_option("--stream", m_stream, "monitored observations CSV")->required();
  mon->add_option("--threshold", m_threshold, "threshold artifact JSON")->required();
  mon->add_option("--out", m_out, "report JSON path (default: stdout)");

  // simulate
  std::string s_scenario, s_out;
  std::uint64_t s_seed = 0;
  CLI::App* sim = app.add_subcommand("simulate", "generate a scenario as CSV");
  sim->add_option("--scenario", s_scenario, "scenario JSON")->required();
  sim->add_option("--seed", s_seed, "random seed");
  sim->add_option("--out", s_out, "output CSV path")->required();

  // experiment
  std::string e_spec, e_out, e_csv;
  CLI::App* exp = app.add_subcommand("experiment", "run a level/power study");
  exp->add_option("--spec", e_spec, "experiment spec JSON")->required();
  exp->add_option("--out", e_out, "results JSON path (default: stdout)");
  exp->add_option("--csv", e_csv, "also write a CSV results table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (thr->parsed())
      return cmd_threshold(tcc, t_mode, t_learning, t_replicates, t_seed,
                           t_bandwidth, t_out);
    if (mon->parsed()) return cmd_monitor(m_learning, m_stream, m_threshold, m_out);
    if (sim->parsed()) return cmd_simulate(s_scenario, s_seed, s_out);
    if (exp->parsed()) return cmd_experiment(e_spec, e_out, e_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
