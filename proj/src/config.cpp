#include "kp/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace kp {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': bad number '" + v +
                      "'");
  }
}

long to_long(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': bad integer '" + v +
                      "'");
  }
}

bool to_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': bad boolean '" + v +
                    "'");
}

std::vector<std::pair<double, double>> to_pair_list(const std::string& v, int line,
                                                    const std::string& key) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                        "': expected 's1,s2' pairs separated by ';'");
    out.emplace_back(to_double(trim(item.substr(0, comma)), line, key),
                     to_double(trim(item.substr(comma + 1)), line, key));
  }
  if (out.empty())
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': empty list");
  return out;
}

std::vector<double> to_list(const std::string& v, int line, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(item, line, key));
  }
  if (out.empty())
    throw ConfigError("line " + std::to_string(line) + ": key '" + key + "': empty list");
  return out;
}

const std::vector<std::string> kGenerators = {"gaussian", "cos_mode",  "soliton",
                                              "soliton_exact", "zaitsev", "random",
                                              "freq_bump", "snapshot"};

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
    const std::string key = trim(raw.substr(0, eq));
    const std::string val = trim(raw.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(line) + ": empty key or value");

    if (key == "equation") {
      if (val != "kp1" && val != "kp2")
        throw ConfigError("line " + std::to_string(line) + ": equation must be kp1 or kp2");
      cfg.equation = val;
    } else if (key == "grid.nx") cfg.nx = int(to_long(val, line, key));
    else if (key == "grid.ny") cfg.ny = int(to_long(val, line, key));
    else if (key == "grid.Lx") cfg.Lx = to_double(val, line, key);
    else if (key == "grid.Ly") cfg.Ly = to_double(val, line, key);
    else if (key == "time.dt") cfg.dt = to_double(val, line, key);
    else if (key == "time.T") cfg.T = to_double(val, line, key);
    else if (key == "time.output_interval") cfg.output_interval = to_double(val, line, key);
    else if (key == "time.drift_guard") cfg.drift_guard = to_bool(val, line, key);
    else if (key == "ic.kind") cfg.ic_kind = val;
    else if (key == "ic.amplitude") cfg.ic_amplitude = to_double(val, line, key);
    else if (key == "ic.c") cfg.ic_c = to_double(val, line, key);
    else if (key == "ic.sigma") cfg.ic_sigma = to_double(val, line, key);
    else if (key == "ic.kx") cfg.ic_kx = int(to_long(val, line, key));
    else if (key == "ic.ky") cfg.ic_ky = int(to_long(val, line, key));
    else if (key == "ic.alpha") cfg.ic_alpha = to_double(val, line, key);
    else if (key == "ic.delta") cfg.ic_delta = to_double(val, line, key);
    else if (key == "ic.xi_lo") cfg.ic_xi_lo = to_double(val, line, key);
    else if (key == "ic.xi_hi") cfg.ic_xi_hi = to_double(val, line, key);
    else if (key == "ic.mu_hi") cfg.ic_mu_hi = to_double(val, line, key);
    else if (key == "ic.path") cfg.ic_path = val;
    else if (key == "norms.hs") cfg.hs_norms = to_pair_list(val, line, key);
    else if (key == "norms.es") cfg.es_norms = to_list(val, line, key);
    else if (key == "envelope.delta") cfg.envelope_delta = to_double(val, line, key);
    else if (key == "seed") cfg.seed = std::uint64_t(to_long(val, line, key));
    else if (key == "output.dir") cfg.output_dir = val;
    else if (key == "output.snapshots") cfg.snapshots = to_bool(val, line, key);
    else if (key == "perturbation.background") cfg.bg_kind = val;
    else if (key == "perturbation.c") cfg.bg_c = to_double(val, line, key);
    else if (key == "perturbation.amplitude_scale")
      cfg.bg_amplitude_scale = to_double(val, line, key);
    else if (key == "perturbation.path") cfg.bg_path = val;
    else if (key == "perturbation.coupling") {
      if (val != "full" && val != "half")
        throw ConfigError("line " + std::to_string(line) + ": coupling must be full or half");
      cfg.coupling = val;
    } else if (key == "probe.mode") cfg.probe_mode = val;
    else if (key == "probe.q") cfg.probe_q = to_double(val, line, key);
    else if (key == "probe.r") cfg.probe_r = to_double(val, line, key);
    else if (key == "probe.T") cfg.probe_T = to_double(val, line, key);
    else if (key == "probe.nt") cfg.probe_nt = int(to_long(val, line, key));
    else if (key == "probe.eps_decay") cfg.probe_eps_decay = to_double(val, line, key);
    else if (key == "probe.samples") cfg.probe_samples = int(to_long(val, line, key));
    else
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
  }

  // Cross-field contracts.
  bool known = false;
  for (const auto& g : kGenerators) known = known || g == cfg.ic_kind;
  if (!known) throw ConfigError("ic.kind: unknown generator '" + cfg.ic_kind + "'");
  if (cfg.dt > cfg.T) throw ConfigError("time.dt exceeds time.T");
  const double ratio = cfg.T / cfg.output_interval;
  if (std::abs(ratio - std::round(ratio)) > 1e-9)
    throw ConfigError("time.output_interval must divide time.T");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

std::string manifest_text(const RunConfig& cfg, const std::map<std::string, std::string>& notes) {
  std::ostringstream os;
  os << "# kplab run manifest (re-parseable as a config file)\n";
  for (const auto& [k, v] : notes) os << "# " << k << " = " << v << "\n";
  os << "equation = " << cfg.equation << "\n";
  os << "grid.nx = " << cfg.nx << "\n";
  os << "grid.ny = " << cfg.ny << "\n";
  os << "grid.Lx = " << format_g17(cfg.Lx) << "\n";
  os << "grid.Ly = " << format_g17(cfg.Ly) << "\n";
  os << "time.dt = " << format_g17(cfg.dt) << "\n";
  os << "time.T = " << format_g17(cfg.T) << "\n";
  os << "time.output_interval = " << format_g17(cfg.output_interval) << "\n";
  os << "time.drift_guard = " << (cfg.drift_guard ? "true" : "false") << "\n";
  os << "ic.kind = " << cfg.ic_kind << "\n";
  os << "ic.amplitude = " << format_g17(cfg.ic_amplitude) << "\n";
  os << "ic.c = " << format_g17(cfg.ic_c) << "\n";
  os << "ic.sigma = " << format_g17(cfg.ic_sigma) << "\n";
  os << "ic.kx = " << cfg.ic_kx << "\n";
  os << "ic.ky = " << cfg.ic_ky << "\n";
  os << "ic.alpha = " << format_g17(cfg.ic_alpha) << "\n";
  os << "ic.delta = " << format_g17(cfg.ic_delta) << "\n";
  os << "ic.xi_lo = " << format_g17(cfg.ic_xi_lo) << "\n";
  os << "ic.xi_hi = " << format_g17(cfg.ic_xi_hi) << "\n";
  os << "ic.mu_hi = " << format_g17(cfg.ic_mu_hi) << "\n";
  if (!cfg.ic_path.empty()) os << "ic.path = " << cfg.ic_path << "\n";
  os << "norms.hs = ";
  for (size_t i = 0; i < cfg.hs_norms.size(); ++i) {
    if (i) os << "; ";
    os << format_g17(cfg.hs_norms[i].first) << "," << format_g17(cfg.hs_norms[i].second);
  }
  os << "\n";
  os << "norms.es = ";
  for (size_t i = 0; i < cfg.es_norms.size(); ++i) {
    if (i) os << "; ";
    os << format_g17(cfg.es_norms[i]);
  }
  os << "\n";
  os << "envelope.delta = " << format_g17(cfg.envelope_delta) << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "output.dir = " << cfg.output_dir << "\n";
  os << "output.snapshots = " << (cfg.snapshots ? "true" : "false") << "\n";
  os << "perturbation.background = " << cfg.bg_kind << "\n";
  os << "perturbation.c = " << format_g17(cfg.bg_c) << "\n";
  os << "perturbation.amplitude_scale = " << format_g17(cfg.bg_amplitude_scale) << "\n";
  if (!cfg.bg_path.empty()) os << "perturbation.path = " << cfg.bg_path << "\n";
  os << "perturbation.coupling = " << cfg.coupling << "\n";
  os << "probe.mode = " << cfg.probe_mode << "\n";
  os << "probe.q = " << format_g17(cfg.probe_q) << "\n";
  os << "probe.r = " << format_g17(cfg.probe_r) << "\n";
  os << "probe.T = " << format_g17(cfg.probe_T) << "\n";
  os << "probe.nt = " << cfg.probe_nt << "\n";
  os << "probe.eps_decay = " << format_g17(cfg.probe_eps_decay) << "\n";
  os << "probe.samples = " << cfg.probe_samples << "\n";
  return os.str();
}

}  // namespace kp
