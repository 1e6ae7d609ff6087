#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kp/errors.hpp"

namespace kp {

/// Run configuration parsed from a line-oriented `key = value` file with
/// dotted section keys.  Unknown keys are hard errors; '#' starts a comment.
struct RunConfig {
  std::string equation = "kp1";  // kp1 | kp2

  int nx = 128, ny = 32;
  double Lx = 40.0 * 3.14159265358979323846;
  double Ly = 2.0 * 3.14159265358979323846;

  double dt = 1e-3;
  double T = 1.0;
  double output_interval = 0.1;
  bool drift_guard = false;

  std::string ic_kind = "gaussian";  // gaussian|cos_mode|soliton|soliton_exact|zaitsev|random|freq_bump|snapshot
  double ic_amplitude = 1.0;
  double ic_c = 1.0;
  double ic_sigma = 2.0;
  int ic_kx = 1, ic_ky = 0;
  double ic_alpha = 1.0, ic_delta = 2.0;
  double ic_xi_lo = 0.8, ic_xi_hi = 2.5, ic_mu_hi = 2.5;
  std::string ic_path;

  std::vector<std::pair<double, double>> hs_norms = {{1.0, 0.0}};
  std::vector<double> es_norms = {1.0};
  double envelope_delta = 1.2;

  std::uint64_t seed = 1;
  std::string output_dir = "out";
  bool snapshots = true;

  std::string bg_kind = "none";  // none|soliton|static_snapshot
  double bg_c = 1.0;
  double bg_amplitude_scale = 2.0;
  std::string bg_path;
  std::string coupling = "full";  // full | half

  std::string probe_mode = "resonance";  // strichartz|decay|resonance
  double probe_q = 4.0, probe_r = 4.0, probe_T = 1.0;
  int probe_nt = 16;
  double probe_eps_decay = 0.0;
  int probe_samples = 10000;

  int eps() const { return equation == "kp2" ? +1 : -1; }
};

/// Parse configuration text.  ConfigError carries line number and key.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Serialize the effective configuration (re-parseable; extra metadata
/// only in comments).
std::string manifest_text(const RunConfig& cfg, const std::map<std::string, std::string>& notes);

/// Full round-trip decimal formatting (17 significant digits).
std::string format_g17(double v);

}  // namespace kp
