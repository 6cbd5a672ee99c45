// Command-line front end: trajectories, steady states, pump/distance
// sweeps, the optimal-pump search and the invariant suite, with CSV or
// JSON tables. All rates are taken in units of gamma1 (gamma1 = 1
// internally); --gamma1 only rescales the time column on output.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sge/dynamics.hpp"
#include "sge/generator.hpp"
#include "sge/negativity.hpp"
#include "sge/params.hpp"
#include "sge/steady_state.hpp"
#include "sge/sweep.hpp"
#include "sge/table_io.hpp"
#include "sge/validation.hpp"

namespace {

using ConfigMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// A configuration file is either a flat "key = value" document or a JSON
// table emitted by a previous run (whose metadata.config is reused).
ConfigMap load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  ConfigMap cfg;
  const std::string probe = trim(text);
  if (!probe.empty() && probe.front() == '{') {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto& cobj = doc.at("metadata").at("config");
    for (auto it = cobj.begin(); it != cobj.end(); ++it) {
      if (it.value().is_string())
        cfg[it.key()] = it.value().get<std::string>();
      else
        cfg[it.key()] = it.value().dump();
    }
    return cfg;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + stripped);
    cfg[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
  }
  return cfg;
}

double to_double(const ConfigMap& cfg, const std::string& key) {
  const std::string& v = cfg.at(key);
  std::size_t pos = 0;
  const double d = std::stod(v, &pos);
  if (trim(v.substr(pos)).size())
    throw std::invalid_argument("config key '" + key + "': bad number '" + v + "'");
  return d;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(trim(tok));
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3)
    throw std::invalid_argument("grid must be start:stop:step, got '" + spec + "'");
  const double start = std::stod(parts[0]);
  const double stop = std::stod(parts[1]);
  const double step = std::stod(parts[2]);
  if (!(step > 0.0) || stop < start)
    throw std::invalid_argument("grid needs step > 0 and stop >= start");
  std::vector<double> grid;
  const long n = std::lround(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

// Everything a command needs, resolved from config file + flags.
struct RunSpec {
  std::string command;
  double gamma1 = 1.0;
  double r = 1.0;
  double Gamma = 0.0, G = 0.0;
  bool have_coupling = false;  // explicit --Gamma/--G given
  std::vector<std::string> presets;
  double Lambda1 = 0.0, Lambda2 = 0.0;
  std::optional<double> tmax;
  double dt = 1e-3;
  std::string grid;
  std::optional<std::pair<double, double>> bracket;
  std::string out;
  std::string format = "csv";
};

RunSpec resolve(const ConfigMap& cfg) {
  RunSpec spec;
  spec.command = cfg.count("command") ? cfg.at("command") : "";
  if (cfg.count("gamma1")) spec.gamma1 = to_double(cfg, "gamma1");
  if (cfg.count("r")) spec.r = to_double(cfg, "r");
  const bool has_gamma_flag = cfg.count("Gamma") > 0;
  const bool has_g_flag = cfg.count("G") > 0;
  const bool has_preset = cfg.count("preset") > 0;
  if (has_preset && (has_gamma_flag || has_g_flag))
    throw std::invalid_argument(
        "preset and explicit couplings (--Gamma/--G) are mutually exclusive");
  if (has_preset) spec.presets = split(cfg.at("preset"), ',');
  if (has_gamma_flag) spec.Gamma = to_double(cfg, "Gamma");
  if (has_g_flag) spec.G = to_double(cfg, "G");
  spec.have_coupling = has_gamma_flag || has_g_flag;

  if (cfg.count("Lambda")) spec.Lambda1 = spec.Lambda2 = to_double(cfg, "Lambda");
  if (cfg.count("Lambda1")) spec.Lambda1 = to_double(cfg, "Lambda1");
  if (cfg.count("Lambda2")) spec.Lambda2 = to_double(cfg, "Lambda2");
  if (cfg.count("tmax")) spec.tmax = to_double(cfg, "tmax");
  if (cfg.count("dt")) spec.dt = to_double(cfg, "dt");
  if (cfg.count("grid")) spec.grid = cfg.at("grid");
  if (cfg.count("bracket_lo") != cfg.count("bracket_hi"))
    throw std::invalid_argument("bracket needs both endpoints");
  if (cfg.count("bracket_lo"))
    spec.bracket = {to_double(cfg, "bracket_lo"), to_double(cfg, "bracket_hi")};
  if (cfg.count("format")) spec.format = cfg.at("format");
  if (spec.format != "csv" && spec.format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (cfg.count("out")) spec.out = cfg.at("out");
  return spec;
}

// Rates are multiples of gamma1; the internal parameter set uses
// gamma1 = 1.
sge::SystemParams build_params(const RunSpec& spec) {
  if (!spec.presets.empty()) {
    if (spec.presets.size() != 1)
      throw std::invalid_argument("this command takes exactly one preset");
    return sge::params_from_preset(spec.presets[0], spec.r, spec.Lambda1, spec.Lambda2);
  }
  return sge::SystemParams(1.0, spec.r, spec.Gamma, spec.G, spec.Lambda1, spec.Lambda2);
}

ConfigMap snapshot_common(const RunSpec& spec) {
  ConfigMap cfg;
  cfg["command"] = spec.command;
  cfg["gamma1"] = sge::format_double(spec.gamma1);
  cfg["r"] = sge::format_double(spec.r);
  if (!spec.presets.empty()) {
    std::string joined;
    for (const auto& p : spec.presets) {
      if (!joined.empty()) joined += ',';
      joined += p;
    }
    cfg["preset"] = joined;
  } else if (spec.have_coupling) {
    cfg["Gamma"] = sge::format_double(spec.Gamma);
    cfg["G"] = sge::format_double(spec.G);
  }
  cfg["Lambda1"] = sge::format_double(spec.Lambda1);
  cfg["Lambda2"] = sge::format_double(spec.Lambda2);
  cfg["format"] = spec.format;
  return cfg;
}

void emit(const sge::OutputDoc& doc, const RunSpec& spec) {
  if (spec.out.empty()) {
    if (spec.format == "json")
      sge::write_json(doc, std::cout);
    else
      sge::write_csv(doc, std::cout);
    return;
  }
  std::ofstream out(spec.out);
  if (!out) throw std::runtime_error("cannot open output file: " + spec.out);
  if (spec.format == "json")
    sge::write_json(doc, out);
  else
    sge::write_csv(doc, out);
}

std::string now_utc() {
  const std::time_t tt = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const std::vector<std::string> kStateColumns = {
    "rho11", "rho22", "rho33", "rho44",     "rho55",     "rho66",     "rho77",
    "rho88", "rho99", "re_rho37", "im_rho37", "re_rho68", "im_rho68"};

void append_state(std::vector<double>& row, const sge::ReducedState& s) {
  for (double p : s.pop) row.push_back(p);
  row.push_back(s.rho37.real());
  row.push_back(s.rho37.imag());
  row.push_back(s.rho68.real());
  row.push_back(s.rho68.imag());
}

int cmd_trajectory(const RunSpec& spec) {
  const sge::SystemParams params = build_params(spec);
  const double t_max = spec.tmax ? *spec.tmax : sge::default_t_max(params);
  const sge::Trajectory traj =
      sge::integrate_system(params, sge::ReducedState::initial_emu(), t_max, spec.dt);

  sge::OutputDoc doc;
  doc.command = "trajectory";
  doc.timestamp = now_utc();
  doc.columns.push_back("t");
  for (const auto& c : kStateColumns) doc.columns.push_back(c);
  doc.columns.push_back("negativity");
  for (std::size_t i = 0; i < traj.size(); ++i) {
    std::vector<double> row;
    row.push_back(traj.times[i] / spec.gamma1);
    append_state(row, traj.states[i]);
    row.push_back(traj.negativities[i]);
    doc.rows.push_back(std::move(row));
  }
  doc.config = snapshot_common(spec);
  doc.config["tmax"] = sge::format_double(t_max);
  doc.config["dt"] = sge::format_double(spec.dt);
  emit(doc, spec);
  return 0;
}

int cmd_steady(const RunSpec& spec) {
  const sge::SystemParams params = build_params(spec);
  const sge::SteadyState st = sge::steady_analytic(params);
  const sge::NegativityResult neg = sge::negativity_of_state(st.state);

  sge::OutputDoc doc;
  doc.command = "steady";
  doc.timestamp = now_utc();
  doc.columns = kStateColumns;
  doc.columns.push_back("negativity");
  doc.columns.push_back("residual");
  std::vector<double> row;
  append_state(row, st.state);
  row.push_back(neg.value);
  row.push_back(st.residual);
  doc.rows.push_back(std::move(row));
  doc.config = snapshot_common(spec);
  emit(doc, spec);
  return 0;
}

sge::OutputDoc sweep_doc(const sge::SweepTable& table, const std::string& command) {
  sge::OutputDoc doc;
  doc.command = command;
  doc.timestamp = table.timestamp;
  doc.columns = {table.key_name, "negativity", "rho99",
                 "re_rho37",     "im_rho37",   "re_rho68", "im_rho68"};
  for (const auto& r : table.rows) {
    doc.rows.push_back({r.key, r.negativity, r.rho99, r.rho37.real(), r.rho37.imag(),
                        r.rho68.real(), r.rho68.imag()});
  }
  return doc;
}

int cmd_sweep_pump(const RunSpec& spec) {
  if (spec.grid.empty())
    throw std::invalid_argument("sweep-pump needs --grid start:stop:step");
  RunSpec base = spec;
  base.Lambda1 = base.Lambda2 = 0.0;  // grid supplies the pump rate
  const sge::SystemParams params = build_params(base);
  const std::vector<double> grid = parse_grid(spec.grid);
  const sge::SweepTable table = sge::sweep_pump(params, grid);

  sge::OutputDoc doc = sweep_doc(table, "sweep-pump");
  doc.config = snapshot_common(spec);
  doc.config.erase("Lambda1");
  doc.config.erase("Lambda2");
  doc.config["grid"] = spec.grid;
  emit(doc, spec);
  return 0;
}

int cmd_sweep_distance(const RunSpec& spec) {
  std::vector<std::string> keys = spec.presets;
  if (keys.empty()) keys = sge::preset_keys();
  const sge::SweepTable table = sge::sweep_distance(keys, spec.Lambda1, spec.r);

  sge::OutputDoc doc = sweep_doc(table, "sweep-distance");
  RunSpec snap = spec;
  snap.presets = keys;
  doc.config = snapshot_common(snap);
  emit(doc, spec);
  return 0;
}

int cmd_optimum(const RunSpec& spec) {
  if (!spec.bracket) throw std::invalid_argument("optimum needs --bracket LO HI");
  const sge::SystemParams params = build_params(spec);
  const sge::OptimalPump opt =
      sge::find_optimal_pump(params, spec.bracket->first, spec.bracket->second);

  sge::OutputDoc doc;
  doc.command = "optimum";
  doc.timestamp = now_utc();
  doc.columns = {"lambda_star", "negativity_star", "entangled"};
  doc.rows.push_back(
      {opt.lambda_star, opt.negativity_star, opt.entangled ? 1.0 : 0.0});
  doc.config = snapshot_common(spec);
  doc.config["bracket_lo"] = sge::format_double(spec.bracket->first);
  doc.config["bracket_hi"] = sge::format_double(spec.bracket->second);
  emit(doc, spec);
  if (!opt.entangled)
    std::cerr << "optimum: no entanglement in bracket ["
              << spec.bracket->first << ", " << spec.bracket->second << "]\n";
  return 0;
}

int cmd_validate(const RunSpec& spec) {
  const std::vector<sge::CheckResult> checks = sge::run_validation();
  bool all_pass = true;
  std::string failing;

  if (spec.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name},
                     {"pass", c.pass},
                     {"metric", c.metric},
                     {"bound", c.bound},
                     {"detail", c.detail}});
      if (!c.pass) {
        all_pass = false;
        failing = c.name;
      }
    }
    nlohmann::json doc = {{"metadata",
                           {{"command", "validate"},
                            {"timestamp", now_utc()},
                            {"config", snapshot_common(spec)}}},
                          {"checks", arr}};
    if (spec.out.empty()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::ofstream out(spec.out);
      out << doc.dump(2) << '\n';
    }
  } else {
    std::ostream* osp = &std::cout;
    std::ofstream file;
    if (!spec.out.empty()) {
      file.open(spec.out);
      osp = &file;
    }
    for (const auto& c : checks) {
      (*osp) << (c.pass ? "PASS " : "FAIL ") << c.name
             << "  metric=" << sge::format_double(c.metric);
      if (c.bound > 0.0) (*osp) << " bound=" << sge::format_double(c.bound);
      (*osp) << "  (" << c.detail << ")\n";
      if (!c.pass) {
        all_pass = false;
        failing = c.name;
      }
    }
  }
  if (!all_pass) {
    nlohmann::json err = {{"error", "validation_failure"},
                          {"message", "invariant check failed: " + failing}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{
      "Two radiatively coupled V-type three-level atoms in a common vacuum:\n"
      "dissipative dynamics, incoherent pumping and entanglement negativity.\n"
      "Rates are in units of gamma1. SGESIM_WORKERS bounds sweep parallelism."};
  app.require_subcommand(0, 1);

  struct Flags {
    std::string config;
    double gamma1 = 1.0, r = 1.0, Gamma = 0.0, G = 0.0;
    double Lambda = 0.0, Lambda1 = 0.0, Lambda2 = 0.0;
    double tmax = 0.0, dt = 1e-3;
    std::vector<std::string> presets;
    std::string grid, out, format;
    std::vector<double> bracket;
  } flags;

  // top-level options allow running straight from a config document
  app.add_option("--config", flags.config, "flat key=value file or JSON table");
  app.add_option("--out", flags.out, "output path (default stdout)");
  app.add_option("--format", flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  const std::vector<std::string> commands = {"trajectory",     "steady", "sweep-pump",
                                             "sweep-distance", "optimum", "validate"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", flags.config, "flat key=value file or JSON table");
    sub->add_option("--gamma1", flags.gamma1, "rate scale; rescales output time only");
    sub->add_option("--r", flags.r, "frequency ratio omega2/omega1");
    sub->add_option("--Gamma", flags.Gamma, "cross damping (units of gamma1)");
    sub->add_option("--G", flags.G, "level shift (units of gamma1)");
    sub->add_option("--preset", flags.presets,
                    "distance preset key (R0.50 R0.83 R1.18 R2.78)");
    sub->add_option("--Lambda", flags.Lambda, "pump rate for both channels");
    sub->add_option("--Lambda1", flags.Lambda1, "pump rate |g>->|e>");
    sub->add_option("--Lambda2", flags.Lambda2, "pump rate |g>->|mu>");
    sub->add_option("--tmax", flags.tmax, "integration horizon (1/gamma1)");
    sub->add_option("--dt", flags.dt, "base step (1/gamma1)");
    sub->add_option("--grid", flags.grid, "pump grid start:stop:step");
    sub->add_option("--bracket", flags.bracket, "search bracket lo hi")->expected(2);
    sub->add_option("--out", flags.out, "output path (default stdout)");
    sub->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    subs[name] = sub;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    ConfigMap cfg;
    std::string command;
    CLI::App* parsed = nullptr;
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) {
        parsed = sub;
        command = name;
      }
    }
    if ((parsed && parsed->count("--config")) || (!parsed && app.count("--config")))
      cfg = load_config(flags.config);
    if (!command.empty()) cfg["command"] = command;
    if (!parsed) {
      if (app.count("--out")) cfg["out"] = flags.out;
      if (app.count("--format")) cfg["format"] = flags.format;
    }

    if (parsed) {
      auto take = [&](const char* flag, const char* key, auto value) {
        if (parsed->count(flag)) {
          std::ostringstream os;
          os.precision(17);
          os << value;
          cfg[key] = os.str();
        }
      };
      take("--gamma1", "gamma1", flags.gamma1);
      take("--r", "r", flags.r);
      take("--Gamma", "Gamma", flags.Gamma);
      take("--G", "G", flags.G);
      take("--Lambda", "Lambda", flags.Lambda);
      take("--Lambda1", "Lambda1", flags.Lambda1);
      take("--Lambda2", "Lambda2", flags.Lambda2);
      take("--tmax", "tmax", flags.tmax);
      take("--dt", "dt", flags.dt);
      if (parsed->count("--preset")) {
        std::string joined;
        for (const auto& p : flags.presets) {
          if (!joined.empty()) joined += ',';
          joined += p;
        }
        cfg["preset"] = joined;
      }
      if (parsed->count("--grid")) cfg["grid"] = flags.grid;
      if (parsed->count("--bracket")) {
        cfg["bracket_lo"] = sge::format_double(flags.bracket[0]);
        cfg["bracket_hi"] = sge::format_double(flags.bracket[1]);
      }
      if (parsed->count("--out")) cfg["out"] = flags.out;
      if (parsed->count("--format")) cfg["format"] = flags.format;
    }

    if (!cfg.count("command") || cfg.at("command").empty()) {
      std::cerr << app.help() << '\n';
      return 2;
    }

    RunSpec spec = resolve(cfg);
    spec.command = cfg.at("command");

    if (spec.command == "trajectory") return cmd_trajectory(spec);
    if (spec.command == "steady") return cmd_steady(spec);
    if (spec.command == "sweep-pump") return cmd_sweep_pump(spec);
    if (spec.command == "sweep-distance") return cmd_sweep_distance(spec);
    if (spec.command == "optimum") return cmd_optimum(spec);
    if (spec.command == "validate") return cmd_validate(spec);
    throw std::invalid_argument("unknown command: " + spec.command);
  } catch (const std::exception& ex) {
    nlohmann::json err = {{"error", "run_failure"}, {"message", ex.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
} catch (const std::exception& ex) {
  std::fprintf(stderr, "{\"error\":\"startup_failure\",\"message\":\"%s\"}\n", ex.what());
  return 1;
}
