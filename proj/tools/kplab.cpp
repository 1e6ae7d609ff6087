// kplab: pseudospectral KP-I / KP-II laboratory.
// Subcommands: simulate | perturb | verify | decompose | probe.
// Exit codes: 0 success, 1 contract error, 2 run truncated (blow-up guard),
// 64 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "kp/decomposition.hpp"
#include "kp/probes.hpp"
#include "kp/runner.hpp"
#include "kp/snapshot.hpp"
#include "kp/version.hpp"

using namespace kp;

namespace {

int cmd_simulate(const std::string& config_path, const std::string& out_override) {
  RunConfig cfg = parse_config_file(config_path);
  const std::string out = out_override.empty() ? cfg.output_dir : out_override;
  SimulateResult res = simulate(cfg, out);
  std::cout << "steps = " << res.state.steps << "\n"
            << "t_final = " << format_g17(res.state.t) << "\n"
            << "status = " << (res.status == RunStatus::ok ? "ok" : "truncated") << "\n"
            << "output = " << out << "\n";
  return res.status == RunStatus::ok ? 0 : 2;
}

int cmd_perturb(const std::string& config_path, const std::string& out_override) {
  RunConfig cfg = parse_config_file(config_path);
  const std::string out = out_override.empty() ? cfg.output_dir : out_override;
  PerturbResult res = perturb(cfg, out);
  double sup_es1 = 0.0;
  for (const auto& r : res.run.samples) sup_es1 = std::max(sup_es1, r.v_es1);
  std::cout << "samples = " << res.run.samples.size() << "\n"
            << "sup_v_es1 = " << format_g17(sup_es1) << "\n"
            << "status = " << (res.status == RunStatus::ok ? "ok" : "truncated") << "\n"
            << "output = " << out << "\n";
  return res.status == RunStatus::ok ? 0 : 2;
}

int cmd_verify(const std::string& solution, double c, double alpha, double delta, int nx, int ny,
               double Lx, double Ly, const std::string& equation) {
  const int eps = equation == "kp2" ? +1 : -1;
  const Grid2D g(nx, ny, Lx, Ly);
  std::cout << "solution = " << solution << "\n"
            << "equation = " << equation << "\n"
            << "grid = " << nx << "x" << ny << "\n"
            << "Lx = " << format_g17(Lx) << "\nLy = " << format_g17(Ly) << "\n";
  if (solution == "line_soliton") {
    RealField printed = line_soliton(c, g, 1.0);
    RealField exact = line_soliton(c, g, kLineSolitonExactScale);
    ResidualReport r1 = traveling_residual(printed, c, eps);
    ResidualReport r2 = traveling_residual(exact, c, eps);
    std::cout << "c = " << format_g17(c) << "\n"
              << "convention = amplitude_scale " << format_g17(kLineSolitonExactScale)
              << " (exact traveling solution of the uu_x-normalized equation)\n"
              << "residual_reference_profile = " << format_g17(r1.rel_residual) << "\n"
              << "residual = " << format_g17(r2.rel_residual) << "\n"
              << "boundary_amplitude = " << format_g17(r2.boundary_amp) << "\n";
    return 0;
  }
  if (solution == "zaitsev") {
    ZaitsevWave w = zaitsev(alpha, delta, g);
    ResidualReport r = traveling_residual(w.field, w.params.frame_speed, eps);
    std::cout << "alpha = " << format_g17(alpha) << "\n"
              << "delta = " << format_g17(delta) << "\n"
              << "kappa = " << format_g17(w.params.kappa) << "\n"
              << "c = " << format_g17(w.params.c) << "\n"
              << "frame_speed = " << format_g17(w.params.frame_speed) << "\n"
              << "modulation_depth = " << format_g17(w.params.modulation_depth) << "\n"
              << "convention = " << w.params.convention << "\n"
              << "residual = " << format_g17(r.rel_residual) << "\n"
              << "boundary_amplitude = " << format_g17(r.boundary_amp) << "\n";
    return 0;
  }
  throw UsageError("verify: unknown --solution '" + solution + "'");
}

int cmd_decompose(const std::string& snapshot, double s, double delta, const std::string& out) {
  Snapshot snap = read_snapshot(snapshot);
  const Spectrum sp = to_spectrum(snap.field);
  const auto scales = band_scales(snap.field.grid);
  const auto norms = band_l2_norms(sp);
  Envelope env = build_envelope(snap.field, s, delta);
  std::ostringstream os;
  os << "N,l2_band,hs_weight,envelope_weight\n";
  for (size_t b = 0; b < scales.size(); ++b) {
    os << format_g17(scales[b]) << "," << format_g17(norms[b]) << ","
       << format_g17(std::pow(1.0 + scales[b] * scales[b], s / 2.0)) << ","
       << format_g17(env.weight(scales[b])) << "\n";
  }
  if (out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out, std::ios::binary);
    f << os.str();
    std::cout << "output = " << out << "\n";
  }
  return 0;
}

int cmd_probe(const RunConfig& cfg) {
  const int eps = cfg.eps();
  if (cfg.probe_mode == "resonance") {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-10.0, 10.0);
    double worst = 0.0;
    long degenerate = 0;
    for (int k = 0; k < cfg.probe_samples; ++k) {
      const double xi = uni(rng), xi1 = uni(rng), mu = uni(rng), mu1 = uni(rng);
      if (xi == 0.0 || xi1 == 0.0 || xi == xi1) {
        ++degenerate;
        continue;
      }
      const ResonancePair p = resonance_kp2(xi, xi1, mu, mu1);
      worst = std::max(worst, std::abs(p.lhs - p.rhs) / std::max(1.0, std::abs(p.rhs)));
    }
    std::cout << "mode = resonance\nseed = " << cfg.seed
              << "\nsamples = " << cfg.probe_samples << "\nskipped_degenerate = " << degenerate
              << "\nmax_rel_mismatch = " << format_g17(worst) << "\n";
    return 0;
  }
  const Grid2D g(cfg.nx, cfg.ny, cfg.Lx, cfg.Ly);
  if (cfg.probe_mode == "strichartz") {
    AdmissiblePair pair(cfg.probe_q, cfg.probe_r);
    RealField phi = build_initial_condition(cfg, g);
    const double r1 = strichartz_ratio(phi, pair, cfg.probe_T, eps, cfg.probe_nt);
    const double r2 = strichartz_ratio(phi, pair, cfg.probe_T, eps, 2 * cfg.probe_nt);
    std::cout << "mode = strichartz\nq = " << format_g17(cfg.probe_q)
              << "\nr = " << format_g17(cfg.probe_r)
              << "\nbeta = " << format_g17(pair.beta) << "\nratio = " << format_g17(r1)
              << "\nratio_nt_doubled = " << format_g17(r2)
              << "\nrefinement_change = " << format_g17(std::abs(r2 - r1) / r1) << "\n";
    return 0;
  }
  if (cfg.probe_mode == "decay") {
    RealField phi = frequency_bump_field(g, cfg.ic_xi_lo, cfg.ic_xi_hi, cfg.ic_mu_hi);
    std::vector<double> times;
    for (int k = 0; k < 12; ++k)
      times.push_back(0.5 * std::pow(cfg.probe_T / 0.5, k / 11.0));
    DecayFit fit = decay_probe(phi, cfg.probe_eps_decay, times, eps);
    std::cout << "mode = decay\neps_decay = " << format_g17(cfg.probe_eps_decay)
              << "\nwindow = " << format_g17(fit.window)
              << "\nslope = " << format_g17(fit.slope)
              << "\nexpected = " << format_g17(-1.0 + cfg.probe_eps_decay / 3.0) << "\n";
    return 0;
  }
  throw UsageError("probe: unknown mode '" + cfg.probe_mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) + " - KP-I/KP-II pseudospectral laboratory"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  auto* sim = app.add_subcommand("simulate", "evolve a configured initial condition");
  sim->add_option("--config", config_path, "config file")->required();
  sim->add_option("--out", out_dir, "override output directory");

  std::string pconfig, pout;
  auto* per = app.add_subcommand("perturb", "evolve a perturbation of a background");
  per->add_option("--config", pconfig, "config file")->required();
  per->add_option("--out", pout, "override output directory");

  std::string solution = "line_soliton", vequation = "kp1";
  double vc = 1.0, valpha = 1.0, vdelta = 2.0, vLx = 80.0 * pi, vLy = pi;
  int vnx = 512, vny = 8;
  auto* ver = app.add_subcommand("verify", "traveling-wave residual report");
  ver->add_option("--solution", solution, "line_soliton | zaitsev");
  ver->add_option("--c", vc, "line soliton speed");
  ver->add_option("--alpha", valpha, "Zaitsev alpha");
  ver->add_option("--delta", vdelta, "Zaitsev delta");
  ver->add_option("--nx", vnx)->check(CLI::PositiveNumber);
  ver->add_option("--ny", vny)->check(CLI::PositiveNumber);
  ver->add_option("--Lx", vLx);
  ver->add_option("--Ly", vLy);
  ver->add_option("--equation", vequation, "kp1 | kp2");

  std::string dsnap, dout;
  double ds = 1.0, ddelta = 1.2;
  auto* dec = app.add_subcommand("decompose", "per-band spectrum report from a KPF1 snapshot");
  dec->add_option("--snapshot", dsnap, "KPF1 file")->required();
  dec->add_option("--s", ds, "Sobolev order for the weight column");
  dec->add_option("--delta", ddelta, "envelope growth constant");
  dec->add_option("--out", dout, "CSV output path (default stdout)");

  std::string prconfig;
  auto* prb = app.add_subcommand("probe", "dispersive estimate probes");
  prb->add_option("--config", prconfig, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;  // --help
    return 64;
  }

  try {
    if (sim->parsed()) return cmd_simulate(config_path, out_dir);
    if (per->parsed()) return cmd_perturb(pconfig, pout);
    if (ver->parsed())
      return cmd_verify(solution, vc, valpha, vdelta, vnx, vny, vLx, vLy, vequation);
    if (dec->parsed()) return cmd_decompose(dsnap, ds, ddelta, dout);
    if (prb->parsed()) return cmd_probe(parse_config_file(prconfig));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const NonFinite& e) {
    std::cerr << "run truncated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
